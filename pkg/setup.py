# -*- coding: utf-8 -*-
import os

from setuptools import setup, find_packages

from octolab import (
    __author__,
    __description__,
    __license__,
    __name__,
    __version__,
)

# the directory we are in
CWD = os.path.abspath(os.path.dirname(__file__))

# Get the long description from the README file
with open(os.path.join(CWD, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

setup(
    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    version=__version__,
    author=__author__,
    description=__description__,
    long_description=long_description,
    license=__license__,
    name=__name__,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',
        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',  # noqa
        'Programming Language :: Python :: 3',
    ],
    keywords='octonions exact-arithmetic lie-algebras calibrations verification',
    packages=find_packages(exclude=['examples', 'examples.*']),
    python_requires='>=3.8',
    install_requires=['pytest', 'numpy', 'sympy', 'hypothesis'],
    entry_points={
        'console_scripts': [
            'octolab=octolab.lab:main',
        ],
    },
)
