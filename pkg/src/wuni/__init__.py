"""Weak uniseriality: closed-form classifiers and brute-force oracles.

Submodules:

* :mod:`wuni.abelian` - finitely generated Z-modules and their grammar
* :mod:`wuni.oracle` - subgroup enumeration and monomorphism search
* :mod:`wuni.classifier` - closed-form verdicts over Z
* :mod:`wuni.rank1` - height sequences and types
* :mod:`wuni.finring` - finite rings given by tables
* :mod:`wuni.sweeps` - classifier-vs-oracle sweeps
"""

from .abelian import FgZModule, ElementaryPower, Prufer, parse_module, render
from .classifier import classify, fg_embeds, is_weakly_uniserial_fg, pgroup_embeds
from .verdict import Verdict

__all__ = ["FgZModule", "ElementaryPower", "Prufer", "parse_module", "render", "classify",
           "fg_embeds", "is_weakly_uniserial_fg", "pgroup_embeds", "Verdict"]
__version__ = "0.1.0"
