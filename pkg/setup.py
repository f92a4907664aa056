from setuptools import setup
from distutils.util import convert_path

main_ns = {}
ver_path = convert_path('hankelfq/version.py')
with open(ver_path) as ver_file:
    exec(ver_file.read(), main_ns)

def readme():
    with open("README.md") as f:
        return f.read()

setup(
    name='hankelfq',
    packages=['hankelfq'],
    version=main_ns['__version__'],
    license='MIT',
    description='Coprime polynomial pairs, Hankel and Toeplitz matrices, and their counts over finite fields',
    long_description=readme(),
    long_description_content_type='text/markdown',
    author='hankelfq developers',
    keywords= ['mathematics', 'finite fields', 'Hankel matrices', 'enumerative combinatorics'],
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.20',
        'scipy',
        'typing_extensions'
        ],
    test_suite='test',
    entry_points={
        'console_scripts': [
            'hankelfq = hankelfq.__main__:main'
        ]
    },
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10'
        ]
)
