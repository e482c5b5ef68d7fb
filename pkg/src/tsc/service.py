"""HTTP service and the in-process handlers shared with the command line.

The handler functions do all the work on plain strings and primitives; the
FastAPI layer only adds request/response models and maps parse failures to
422 responses carrying the error position.
"""

from __future__ import annotations

from dataclasses import dataclass

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from tsc.calculus import derives, embed, normalize, parse_sequent
from tsc.dot import frame_dot
from tsc.formula import parse_formula, print_formula
from tsc.ordinal import ONE, ParseError, iter_cnf_below, parse_ordinal
from tsc.oracle import FragmentSpec, enumerate_points
from tsc.semantics import InvalidLSequence, forces, minimal_point, parse_point, print_point

# -- handlers (pure, shared by CLI and service) -------------------------------


@dataclass(frozen=True)
class NormalizeResult:
    normal_form: str
    point: str


@dataclass(frozen=True)
class DecideResult:
    derivable: bool
    countermodel: str | None


@dataclass(frozen=True)
class CheckResult:
    holds: bool


def handle_normalize(formula_text: str) -> NormalizeResult:
    f = parse_formula(formula_text)
    return NormalizeResult(
        normal_form=print_formula(embed(normalize(f))),
        point=print_point(minimal_point(f)),
    )


def handle_decide(sequent_text: str) -> DecideResult:
    verdict = derives(parse_sequent(sequent_text))
    countermodel = None
    if verdict.countermodel is not None:
        countermodel = print_point(verdict.countermodel)
    return DecideResult(derivable=verdict.derivable, countermodel=countermodel)


def handle_check(point_text: str, formula_text: str) -> CheckResult:
    x = parse_point(point_text)
    f = parse_formula(formula_text)
    return CheckResult(holds=forces(x, f))


def handle_frame_dot(
    max_coordinate: str,
    support: int,
    bases: list[int],
    coefficient_cap: int = 2,
    full: bool = False,
) -> str:
    bound = parse_ordinal(max_coordinate)
    universe = tuple(iter_cnf_below(bound, coefficient_cap))
    spec = FragmentSpec(universe, support, (ONE,))
    return frame_dot(enumerate_points(spec), bases, full=full)


# -- HTTP layer ---------------------------------------------------------------


class NormalizeRequest(BaseModel):
    formula: str


class NormalizeResponse(BaseModel):
    normal_form: str
    point: str


class DecideRequest(BaseModel):
    sequent: str


class DecideResponse(BaseModel):
    derivable: bool
    countermodel: str | None = None


class CheckRequest(BaseModel):
    point: str
    formula: str


class CheckResponse(BaseModel):
    holds: bool


class FrameDotRequest(BaseModel):
    max_coordinate: str
    support: int = Field(default=2, ge=0)
    bases: list[int] = [0, 1]
    coefficient_cap: int = Field(default=2, ge=1)
    full: bool = False


class FrameDotResponse(BaseModel):
    dot: str


app = FastAPI(
    title="tsc",
    description="Ordinal-exponent modal calculus: normalization, derivability, "
    "model checking, frame visualization.",
)


@app.exception_handler(ParseError)
async def parse_error_handler(request: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={"detail": {"message": str(exc), "position": exc.position}},
    )


@app.exception_handler(InvalidLSequence)
async def invalid_point_handler(request: Request, exc: InvalidLSequence) -> JSONResponse:
    return JSONResponse(
        status_code=422,
        content={"detail": {"message": str(exc), "coordinate": exc.index}},
    )


@app.post("/normalize", response_model=NormalizeResponse)
async def normalize_endpoint(request: NormalizeRequest) -> NormalizeResponse:
    result = handle_normalize(request.formula)
    return NormalizeResponse(normal_form=result.normal_form, point=result.point)


@app.post("/decide", response_model=DecideResponse)
async def decide_endpoint(request: DecideRequest) -> DecideResponse:
    result = handle_decide(request.sequent)
    return DecideResponse(derivable=result.derivable, countermodel=result.countermodel)


@app.post("/check", response_model=CheckResponse)
async def check_endpoint(request: CheckRequest) -> CheckResponse:
    return CheckResponse(holds=handle_check(request.point, request.formula).holds)


@app.post("/frame-dot", response_model=FrameDotResponse)
async def frame_dot_endpoint(request: FrameDotRequest) -> FrameDotResponse:
    dot = handle_frame_dot(
        request.max_coordinate,
        request.support,
        request.bases,
        request.coefficient_cap,
        request.full,
    )
    return FrameDotResponse(dot=dot)
