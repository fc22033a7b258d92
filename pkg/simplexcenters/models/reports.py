from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, Field

from simplexcenters.models.geometry import Point


class FTMode(BaseModel):
    """How the Fermat-Torricelli point was found"""

    kind: Literal["floating", "absorbed"] = Field(
        description="floating: interior minimizer; absorbed: a vertex"
    )
    vertex: Optional[int] = Field(
        default=None, description="1-based label of the absorbing vertex"
    )
    residual: float = Field(description="Norm of the unit-vector sum at the returned point")
    iterations: int = Field(default=0, description="Iterations spent by the solver")


class CenterReport(BaseModel):
    """All centers and radii of one simplex, with coincidence flags"""

    dimension: int
    centroid: Point
    circumcenter: Point
    circumradius: float
    incenter: Point
    inradius: float
    fermat_torricelli: Point
    ft_mode: FTMode
    monge: Point
    orthocenter: Optional[Point] = Field(
        default=None, description="Common point of the altitudes, if they concur"
    )
    complementary_1_centroid: Optional[Point] = Field(
        default=None, description="Vertex average weighted by opposite facet edge sums"
    )
    one_center: Optional[Point] = Field(
        default=None, description="Center of the sphere tangent to all edges, if any"
    )
    one_center_radius: Optional[float] = None
    coincidences: List[List[str]] = Field(
        default_factory=list, description="Sorted name pairs of coinciding centers"
    )


class ClassificationWitnesses(BaseModel):
    """Raw quantities behind every classification predicate"""

    spreads: Dict[str, float] = Field(
        description="Relative spread (max-min)/mean of the compared quantities per predicate"
    )
    edge_lengths: List[float]
    facet_volumes: List[float]
    facet_circumradii: List[float]
    facet_inradii: List[float]
    edge_square_sums: List[float]
    facet_perimeters: Optional[List[float]] = Field(
        default=None, description="Tetrahedra only"
    )
    opposite_edge_spreads: Optional[List[float]] = Field(
        default=None, description="Tetrahedra only: |AB-CD|, |AC-BD|, |AD-BC| relative"
    )
    orthocentric_residuals: Optional[List[float]] = Field(
        default=None, description="Tetrahedra only: opposite-edge inner products"
    )


class ClassificationReport(BaseModel):
    """Facial-structure predicates of one simplex"""

    dimension: int
    regular: bool
    equifacetal: Optional[bool] = Field(
        description="None when the dimension exceeds the congruence search bound"
    )
    equiareal: bool
    equiradial: bool
    well_distributed: bool
    isosceles: Optional[int] = Field(description="1-based apex label, if any")
    orthocentric: bool
    facet_inradii_equal: bool
    near_degenerate: bool = Field(
        description="Volume below abs_tol: predicates are unreliable"
    )
    witnesses: ClassificationWitnesses


class CevianReport(BaseModel):
    """Cevians of a simplex through one point"""

    through: Point
    coefficients: List[float] = Field(description="Dependence coefficients, summing to 1")
    feet: List[Point] = Field(description="Foot of the cevian from each vertex")
    lengths: List[float]
    closed_form_lengths: List[float] = Field(
        description="|s|/|s-a_j| * |A_j - P| for every vertex"
    )
    spread: float = Field(description="(max-min)/mean of the lengths")
    equal: bool
    lemma52_r: Optional[int] = Field(
        default=None,
        description="Partition size r when the point is the circumcenter and cevians are equal",
    )


class Lemma52Structure(BaseModel):
    """Vertex partition realizing equal cevians through the circumcenter"""

    r: int
    leading: List[int] = Field(description="1-based labels weighted by 2d-2r+1")
    trailing: List[int] = Field(description="1-based labels weighted by -(2r-1)")
    coefficients: List[float] = Field(description="Sign-normalized dependence coefficients")
    residual: float = Field(description="Norm of the weighted vertex sum")


class Theorem51Verdict(BaseModel):
    """The four equal-cevian conditions evaluated on one simplex"""

    centroid_is_circumcenter: bool
    equal_cevians_centroid: bool
    equal_cevians_fermat: bool
    circumcenter_inside: bool
    equal_cevians_circumcenter: bool
    fermat_floating: bool
    decisive: bool = Field(
        description="Fermat point floating and circumcenter membership away from the boundary"
    )
    consistent: bool = Field(description="All four conditions agree")
    spreads: Dict[str, Optional[float]]

    @property
    def conditions(self) -> List[bool]:
        return [
            self.centroid_is_circumcenter,
            self.equal_cevians_centroid,
            self.equal_cevians_fermat,
            self.circumcenter_inside and self.equal_cevians_circumcenter,
        ]


class AnalysisReport(BaseModel):
    """Everything ``analyze`` prints for one simplex"""

    centers: CenterReport
    classification: ClassificationReport
    cevians: Optional[CevianReport] = Field(
        default=None, description="Cevians through the requested center"
    )
