import re
from fractions import Fraction
from typing import Annotated, Any, Dict, List, Optional

import orjson
from pydantic import BaseModel, Field, ValidationError, model_validator

from .errors import ParseError
from .radial import LevelProfile

RATIONAL = r"^-?\d+(/\d+)?$"
_RATIONAL_RE = re.compile(RATIONAL)

RationalStr = Annotated[str, Field(pattern=RATIONAL)]
IntegerStr = Annotated[str, Field(pattern=r"^-?\d+$")]


def rational_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"not an exact rational 'p/q': {text!r}")
    try:
        return Fraction(text.strip())
    except ZeroDivisionError as e:
        raise ParseError(f"zero denominator in {text!r}") from e


class ProfileSchema(BaseModel):
    n: int = Field(ge=1)
    values: List[RationalStr]

    @model_validator(mode="after")
    def _length(self):
        if len(self.values) != self.n + 1:
            raise ValueError(f"profile for n={self.n} needs {self.n + 1} values, got {len(self.values)}")
        return self


class CertificateSchema(BaseModel):
    n: int = Field(ge=1)
    d: int = Field(ge=1)
    m: Optional[int] = Field(None, ge=1)
    r: int = Field(ge=0)
    phi: List[RationalStr]
    gamma_hat: List[RationalStr]
    gamma: List[RationalStr]
    g: List[RationalStr]
    kind: str = Field("walk", pattern=r"^(walk|mrrw)$")

    @model_validator(mode="after")
    def _walk_has_m(self):
        if self.kind == "walk" and self.m is None:
            raise ValueError("a walk certificate needs m")
        return self


class FeasibilityReportSchema(BaseModel):
    n: int
    d: int
    m: int
    r: int
    feasible: bool
    threshold: IntegerStr
    walks_r: IntegerStr
    walks_r_minus_1: IntegerStr
    margin_r: IntegerStr
    margin_r_minus_1: IntegerStr
    parity_ok: bool
    sign_ok: bool


class LPSolutionSchema(BaseModel):
    n: int
    d: int
    value: RationalStr
    profile: List[RationalStr]
    status: str = Field(pattern=r"^(optimal|infeasible|unbounded)$")


class BoundReportSchema(BaseModel):
    n: int
    d: int
    method: str
    bound: RationalStr
    exponent: float
    parameters: Dict[str, Any] = Field(default_factory=dict)
    witness: Optional[List[str]] = None
    feasibility: Optional[FeasibilityReportSchema] = None
    lp_solution: Optional[LPSolutionSchema] = None


class CurveRowSchema(BaseModel):
    delta: float
    gv: float
    mrrw1: float
    cert_exponent: Optional[float] = None


def dump_json(model: BaseModel) -> bytes:
    return orjson.dumps(
        model.model_dump(exclude_none=True),
        option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS,
    )


def dump_json_list(models: List[BaseModel]) -> bytes:
    return orjson.dumps(
        [m.model_dump(exclude_none=True) for m in models],
        option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS,
    )


def load_json(data: bytes) -> Dict[str, Any]:
    try:
        obj = orjson.loads(data)
    except orjson.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    return obj


def validate(schema: type, obj: Dict[str, Any]) -> BaseModel:
    try:
        return schema.model_validate(obj)
    except ValidationError as e:
        raise ParseError(str(e)) from e


# ---------- conversions ----------

def profile_values(p: LevelProfile) -> List[str]:
    return [rational_str(v) for v in p]


def profile_out(p: LevelProfile) -> ProfileSchema:
    return ProfileSchema(n=p.n, values=profile_values(p))


def profile_in(values: List[str], n: Optional[int] = None) -> LevelProfile:
    parsed = tuple(parse_rational(v) for v in values)
    n = len(parsed) - 1 if n is None else n
    if len(parsed) != n + 1:
        raise ParseError(f"profile for n={n} needs {n + 1} values, got {len(parsed)}")
    return LevelProfile(n, parsed)


def certificate_out(cert) -> CertificateSchema:
    """Certificate or MRRWCertificate; the latter has no m."""
    return CertificateSchema(
        n=cert.n,
        d=cert.d,
        m=getattr(cert, "m", None),
        r=cert.r,
        phi=profile_values(cert.phi),
        gamma_hat=profile_values(cert.gamma_hat),
        gamma=profile_values(cert.gamma),
        g=profile_values(cert.g),
        kind="walk" if hasattr(cert, "m") else "mrrw",
    )


def feasibility_out(rep) -> FeasibilityReportSchema:
    return FeasibilityReportSchema(
        n=rep.n,
        d=rep.d,
        m=rep.m,
        r=rep.r,
        feasible=rep.feasible,
        threshold=str(rep.threshold),
        walks_r=str(rep.walks_r),
        walks_r_minus_1=str(rep.walks_r_minus_1),
        margin_r=str(rep.margin_r),
        margin_r_minus_1=str(rep.margin_r_minus_1),
        parity_ok=rep.parity_ok,
        sign_ok=rep.sign_ok,
    )


def lp_solution_out(sol) -> LPSolutionSchema:
    return LPSolutionSchema(
        n=sol.n,
        d=sol.d,
        value=rational_str(sol.value),
        profile=profile_values(sol.profile),
        status=sol.status,
    )


def report_out(rep) -> BoundReportSchema:
    return BoundReportSchema(
        n=rep.n,
        d=rep.d,
        method=rep.method,
        bound=rational_str(rep.bound),
        exponent=rep.exponent,
        parameters=rep.parameters,
        witness=None if rep.witness is None else rep.witness.to_bitstrings().splitlines(),
        feasibility=None if rep.feasibility is None else feasibility_out(rep.feasibility),
        lp_solution=None if rep.lp_solution is None else lp_solution_out(rep.lp_solution),
    )


def dump_json_rows(rows: List[Dict[str, str]]) -> bytes:
    return orjson.dumps(rows, option=orjson.OPT_INDENT_2)
