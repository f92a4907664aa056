# -*- coding: utf-8 -*-
"""hankelfq version"""

__version__ = '0.3.0'
