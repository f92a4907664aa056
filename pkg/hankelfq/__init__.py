# -*- coding: utf-8 -*-
"""hankelfq

Coprime polynomial pairs and nonsingular Hankel and Toeplitz matrices over
finite fields: the explicit correspondence between them, closed-form counts
by rank and leading-minor index, and the exhaustive censuses that check them.
"""

from .version import __version__
from .exceptions import *
from .field import *
from .poly import *
from .structured import *
from .correspondence import *
from .census import *
from .batch import *
from .enumeration import *

from . import formats
from . import linalg
