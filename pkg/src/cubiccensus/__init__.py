"""Cubic field census by discriminant and the two-term density model behind it.

Subpackages:
  forms       exact integer algebra of binary cubic forms
  canonical   GL2(Z) reduction and canonical class representatives
  census      the enumeration engine, tallies, and the census file format
  abelian     cyclic cubic fields by conductor and cubic character
  asymptotics special functions, density constants, model evaluators
  report      table generation, published reference data, verification
"""

from cubiccensus.forms import (
    BinaryCubicForm,
    QuadraticForm,
    SplittingSymbol,
    UnimodularMatrix,
    discriminant,
    hessian,
    is_cyclic,
    is_irreducible,
    is_maximal,
    is_maximal_at,
    is_primitive,
    splitting_type,
    transform,
)

__version__ = "0.1.0"
