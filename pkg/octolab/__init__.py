# -*- coding: utf-8 -*-
"""
octolab: exact-arithmetic checks of an octonionic construction.

Octonion and bioctonion products, X-product torsion, Lie-algebra closure,
calibration forms, D4 roots and dimension bookkeeping, plus a command-line
verifier that reports pass/fail per claim.
"""
import os

# current dir
CWD = os.path.abspath(os.path.dirname(__file__))

__name__ =        'octolab'
__description__ = 'exact octonion, torsion, Lie closure and calibration checks'
__version__ =     '0.1'
__author__ =      'octolab contributors'
__license__ =     'GPLv3+'


# have a way to test from python
def test():
    import pytest
    return pytest.main([CWD,])
