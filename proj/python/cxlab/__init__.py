"""Exact homological algebra over graded complete intersections over F_p."""

from ._cxlab import (
    CxlabError,
    InvalidInput,
    Module,
    Resolution,
    ResourceLimit,
    Ring,
    SelfTestFailure,
    check_finite_length,
    check_two_gap,
    check_uniform_gap,
    complexity,
    corpus,
    explore_mixed_gaps,
    ext,
    hypersurface_example,
    k_eta,
    random_module,
    reduction_chain,
    resolve,
    tor,
)

__all__ = [
    "CxlabError",
    "InvalidInput",
    "Module",
    "Resolution",
    "ResourceLimit",
    "Ring",
    "SelfTestFailure",
    "check_finite_length",
    "check_two_gap",
    "check_uniform_gap",
    "complexity",
    "corpus",
    "explore_mixed_gaps",
    "ext",
    "hypersurface_example",
    "k_eta",
    "random_module",
    "reduction_chain",
    "resolve",
    "tor",
]
