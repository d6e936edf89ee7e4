"""Keep the examples embedded in docstrings from rotting."""

import doctest

import toriso.cohomology
import toriso.fans
import toriso.isomorphism
import toriso.lattice
import toriso.quotient
import toriso.simplicial

MODULES = (
    toriso.lattice,
    toriso.simplicial,
    toriso.fans,
    toriso.cohomology,
    toriso.isomorphism,
    toriso.quotient,
)


def test_module_doctests():
    for module in MODULES:
        failures, _ = doctest.testmod(module, verbose=False)
        assert failures == 0, module.__name__
