from ._freeknots import (
    Diagram,
    FreeKnotsError,
    bounded_equiv,
    bracket,
    certified_nonsplit,
    delta_L,
    gaussian_parities,
    kprime_from_k2,
    moves,
    normalize_G,
    p_L_parities,
    projection_Kprime,
    smoothing_bracket,
    turaev_delta,
)

__all__ = [
    "Diagram",
    "FreeKnotsError",
    "bounded_equiv",
    "bracket",
    "certified_nonsplit",
    "delta_L",
    "gaussian_parities",
    "kprime_from_k2",
    "moves",
    "normalize_G",
    "p_L_parities",
    "projection_Kprime",
    "smoothing_bracket",
    "turaev_delta",
]
