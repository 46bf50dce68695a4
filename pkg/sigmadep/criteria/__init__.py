"""
Transformal dependence criteria for first-order equations.
"""

# From additive.py
from .additive import AdditiveCertificate, additive_dependence, additive_dependence_multi, additive_galois_group

# From multiplicative.py
from .multiplicative import multiplicative_dependence

# From inhomogeneous.py
from .inhomogeneous import RationalWitnessCertificate, SigmaRelationCertificate, inhomogeneous_first_order

__all__ = [
    # From additive.py
    "AdditiveCertificate",
    "additive_dependence",
    "additive_dependence_multi",
    "additive_galois_group",
    # From multiplicative.py
    "multiplicative_dependence",
    # From inhomogeneous.py
    "RationalWitnessCertificate",
    "SigmaRelationCertificate",
    "inhomogeneous_first_order",
]
