"""
KBlowup - Cyclic homology and negative K-theory of singularities via blowups

Exact computer algebra over QQ: Groebner bases, filtered deformations and
tangent cones, blowup squares, Kähler forms and de Rham / Čech cohomology,
cyclic homology (bicomplex and Hodge formulas), long exact sequences.

Basic Usage:
    $ kblowup tangent-cone --vars x,y --ideal "y^2-x^2-x^3"
    $ kblowup main-theorem --vars x,y --ideal "y^2-x^2-x^3" --i 0 --n -3..-1

Library Usage:
    from kblowup.poly import parse_ideal
    from kblowup.ktheory import main_theorem

    ideal = parse_ideal(["y^2 - x^2 - x^3"], ("x", "y"))
    report = main_theorem(ideal, [0], range(-3, 0))
"""

__version__ = "0.1.0"
__author__ = "KBlowup Team"

# No eager imports - subpackages load sympy on demand

__all__ = [
    "__version__",
    "__author__",
]
