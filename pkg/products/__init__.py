"""
products - productos cartesiano, fuerte y lexicográfico, sus cotas de
Adim y el asesor de endurecimiento.
"""
from .products import ProductKind, ProductSpec, product, swap_relabeling
from .bounds import (
    ProductBound,
    cartesian_bound_ecc,
    cartesian_bound_geodetic2,
    connectivity_formula,
    lexicographic_bound,
    strong_product_bound,
)
from .advisor import (
    CARTESIAN_WARNING,
    AdviceEntry,
    AdviceStatus,
    HardeningAdvice,
    HardeningAdvisor,
    harden,
)

__all__ = [
    'ProductKind',
    'ProductSpec',
    'product',
    'swap_relabeling',
    'ProductBound',
    'cartesian_bound_ecc',
    'cartesian_bound_geodetic2',
    'connectivity_formula',
    'lexicographic_bound',
    'strong_product_bound',
    'CARTESIAN_WARNING',
    'AdviceEntry',
    'AdviceStatus',
    'HardeningAdvice',
    'HardeningAdvisor',
    'harden',
]
