from enum import Enum
from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


class FamilyTag(BaseModel):
    family: str
    params: Tuple[int, ...] = ()

    def __str__(self) -> str:
        return f"{self.family}({','.join(str(p) for p in self.params)})"


class ExactFactor(BaseModel):
    """One square-free factor f with exponent e: deg f eigenvalues, each of multiplicity e."""
    coeffs: List[str]  # monic, highest degree first, rationals as "p/q"
    multiplicity: int
    degree: int
    rational_roots: List[str] = Field(default_factory=list)
    approx_roots: List[float] = Field(default_factory=list)  # descending

    def describe(self) -> str:
        if self.degree == 1:
            return self.rational_roots[0]
        return "root of [" + ", ".join(self.coeffs) + "]"


class Spectrum(BaseModel):
    order: int
    clusters: List[Tuple[float, int]]  # descending by value
    exact: Optional[List[ExactFactor]] = None
    uncertain: bool = False

    def values(self) -> List[float]:
        """rho_1 >= rho_2 >= ... >= rho_n."""
        return [value for value, mult in self.clusters for _ in range(mult)]

    def rho(self, i: int) -> float:
        return self.values()[i - 1]

    def multiplicity(self, value: float, tol: float = 1e-8) -> int:
        return sum(m for v, m in self.clusters if abs(v - value) <= tol)

    def to_json_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"clusters": [[v, m] for v, m in self.clusters]}
        if self.exact is not None:
            data["exact"] = [[f.coeffs, f.multiplicity] for f in self.exact]
        if self.uncertain:
            data["uncertain"] = True
        return data


class TheoremCase(str, Enum):
    CASE_I = "Case-i"
    CASE_II = "Case-ii"
    UNCHARACTERIZED_NU2 = "Uncharacterized-nu2"
    NOT_IN_CLASS = "NotInClass"


class ClassificationReport(BaseModel):
    graph6: str
    n: int
    in_class: bool
    theta: Optional[str] = None
    thetas: List[str] = Field(default_factory=list)
    rho_second_least_is_one: bool
    independence_number: int
    family: Optional[FamilyTag] = None
    theorem_case: TheoremCase
    spectrum: Spectrum
    float_agrees: Optional[bool] = None
    mult_n_minus_2: bool = False
    inconsistency: Optional[str] = None


class AssertionStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "n/a"


class CommonVertexReport(BaseModel):
    triple: Tuple[int, int, int]
    hypotheses_ok: bool
    hypothesis_violations: List[str] = Field(default_factory=list)
    assertions: Dict[str, AssertionStatus]
    witnesses: Dict[str, List[int]] = Field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(s != AssertionStatus.FAIL for s in self.assertions.values())


class Mismatch(BaseModel):
    graph6: str
    reason: str


class FamilyRecord(BaseModel):
    graph6: str
    family: Optional[str] = None


class VerificationReport(BaseModel):
    n: Optional[int] = None
    total: int = 0
    counts: Dict[str, int] = Field(default_factory=dict)
    case_i: List[FamilyRecord] = Field(default_factory=list)
    case_ii: List[FamilyRecord] = Field(default_factory=list)
    uncharacterized: List[str] = Field(default_factory=list)
    mismatches: List[Mismatch] = Field(default_factory=list)
    commonvertex_triples_checked: int = 0
    float_disagreements: List[str] = Field(default_factory=list)
    elapsed_seconds: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.mismatches


class CospectralMate(BaseModel):
    graph6: str
    family: Optional[str] = None
    mates: List[str]


class DSReport(BaseModel):
    n: int
    graphs: int
    buckets: int
    characterized: int
    counterexamples: List[CospectralMate] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples


class ConjectureCandidate(BaseModel):
    graph6: str
    thetas: List[str]
    spectrum: Spectrum


class LemmaOutcome(BaseModel):
    status: AssertionStatus
    detail: str = ""


class LemmaSuiteReport(BaseModel):
    graph6: str
    results: Dict[str, LemmaOutcome]

    @property
    def passed(self) -> bool:
        return all(o.status != AssertionStatus.FAIL for o in self.results.values())


OutputFormat = Literal["json", "csv", "text"]


class CliConfig(BaseModel):
    tolerance: float = Field(default=1e-8, gt=0)
    exact: bool = True
    format: OutputFormat = "json"
    workers: int = Field(default=1, ge=1)
    input_file: Optional[str] = None
    family: Optional[str] = None
    family_params: Dict[str, Any] = Field(default_factory=dict)
    timing: bool = False
    seed: int = 0

    @model_validator(mode="after")
    def _one_source(self) -> "CliConfig":
        if self.input_file is not None and self.family is not None:
            raise ValueError("give either --input or --family, not both")
        return self

    @property
    def source(self) -> str:
        if self.family is not None:
            return "family"
        if self.input_file is not None and self.input_file != "-":
            return "file"
        return "stdin"
