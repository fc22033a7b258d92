from simplexcenters.verifiers.base_verifier import BaseVerifier
from simplexcenters.verifiers.cevian_verifier import CevianVerifier
from simplexcenters.verifiers.coincidence_verifier import CoincidenceVerifier
from simplexcenters.verifiers.gram_verifier import GramVerifier
from simplexcenters.verifiers.tetrahedron_verifier import TetrahedronVerifier

__all__ = [
    "BaseVerifier",
    "CevianVerifier",
    "CoincidenceVerifier",
    "GramVerifier",
    "TetrahedronVerifier",
]
