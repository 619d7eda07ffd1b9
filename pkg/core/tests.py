"""
Core App Test Suite

This module imports all test classes from the organized test files:
- tests_exactq.py: exact rationals, truncated q-series, Pochhammer symbols
- tests_minimal_model.py: model parameters, conformal dimensions, weights, v
- tests_path_comb.py: rigged paths, admissibility, enumeration, exponents
- tests_particle_moves.py: blocks, moves, riggings and the iota bijection
- tests_characters.py: character formulas and q-series identities
- tests_commands.py: verification suites and management commands

Usage:
    # Run all tests
    python manage.py test core

    # Run specific test class
    python manage.py test core.tests.MoveTests

    # Run specific test method
    python manage.py test core.tests.MoveTests.test_reflection_move
"""

# Import all test classes from separate test files
from .tests_exactq import (
    InfinitySentinelTests,
    PochhammerTests,
    QSeriesArithmeticTests,
    RationalCoercionTests,
    RingLawTests,
)
from .tests_minimal_model import ConformalDimensionTests, ModelParamsTests, VIntTests, WeightTests
from .tests_path_comb import AdmissibilityTests, DegreeTests, EnumerationTests, ExponentTests, PathFormatTests, PThreeTests
from .tests_particle_moves import BlockTests, EmbeddingTests, MoveTests, PartitionTests, PropertyCheckTests
from .tests_characters import BosonicTests, CompareSeriesTests, FermionicTests, MultiSumTests, RecurrenceTests
from .tests_commands import (
    CharCommandTests,
    EnumerateCommandTests,
    OrbitCommandTests,
    SuiteTests,
    VerifyCommandTests,
)

# Make test classes available in this module
__all__ = [
    'RationalCoercionTests',
    'InfinitySentinelTests',
    'QSeriesArithmeticTests',
    'RingLawTests',
    'PochhammerTests',
    'ModelParamsTests',
    'ConformalDimensionTests',
    'WeightTests',
    'VIntTests',
    'PathFormatTests',
    'AdmissibilityTests',
    'DegreeTests',
    'EnumerationTests',
    'ExponentTests',
    'PThreeTests',
    'PartitionTests',
    'BlockTests',
    'MoveTests',
    'EmbeddingTests',
    'PropertyCheckTests',
    'BosonicTests',
    'FermionicTests',
    'RecurrenceTests',
    'MultiSumTests',
    'CompareSeriesTests',
    'SuiteTests',
    'CharCommandTests',
    'EnumerateCommandTests',
    'VerifyCommandTests',
    'OrbitCommandTests',
]
