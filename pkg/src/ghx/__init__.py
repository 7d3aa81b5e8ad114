"""Exact homological algebra over Q[c] and phantom maps of free rational T-spectra."""

__version__ = "0.1.0"

from .graded_core import (
    DEFAULT_WINDOW,
    CanonicalModule,
    DegreeMismatchError,
    IllDefinedMapError,
    ModuleMap,
    Monomial,
    PresentationMatrix,
    c_multiple_dims,
    cokernel,
    dims_in_window,
    image,
    kernel,
    map_subquotients,
    snf_canonicalize,
)
from .hom_ext import (
    ext_module,
    ext_via_resolution,
    hom_module,
    hom_space_basis,
    verify_hom_ext_exactness,
)
from .circle_model import (
    FreeOrbit,
    Sphere,
    Susp,
    Wedge,
    bracket_dims,
    homotopy,
    phantom_analysis,
    verify_counterexample,
)
from .freyd_envelope import (
    EnvelopeMorphism,
    EnvelopeObject,
    env_compose,
    env_embed,
    env_hom_dims,
    env_homological_value,
    env_is_zero,
    extend_faithfulness_check,
)
from .grammar import GrammarError, parse_map, parse_module, parse_spectrum
