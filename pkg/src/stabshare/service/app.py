"""FastAPI service wrapping the core package.

Every endpoint is a pure request/response computation over the same report
builders the CLI uses.  Domain errors map to 422, over-cap computations to
413, both with a machine-readable error code.

Run with::

    uvicorn stabshare.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .._version import __version__
from ..codefile import parse_classical_pair, parse_code_file
from ..constructions import RSParams, css_scheme, hermitian_scheme, rs_scheme
from ..errors import StabshareError, TooLarge
from ..gv import AsymptoticQuery, GVQuery, field_from_order
from ..report import (
    analyze_report,
    construct_report,
    distances_report,
    gv_asym_report,
    gv_report,
    search_report,
    simulate_report,
)
from .models import (
    AnalyzeRequest,
    CSSConstructRequest,
    DistancesRequest,
    ErrorResponse,
    GVAsymRequest,
    GVRequest,
    HermitianConstructRequest,
    RSConstructRequest,
    SearchRequest,
    SimulateRequest,
)

ERROR_RESPONSES = {
    413: {"model": ErrorResponse},
    422: {"model": ErrorResponse},
}


def create_app() -> FastAPI:
    app = FastAPI(
        title="stabshare",
        version=__version__,
        description="Access structures of ramp secret sharing from quantum stabilizer codes",
    )

    @app.exception_handler(StabshareError)
    async def _domain_error(request: Request, exc: StabshareError):
        status = 413 if isinstance(exc, TooLarge) else 422
        return JSONResponse(
            status_code=status,
            content={"error": {"code": exc.code, "message": str(exc)}},
        )

    @app.get("/health")
    def health() -> dict:
        return {"name": "stabshare", "version": __version__, "status": "ok"}

    @app.post("/analyze", responses=ERROR_RESPONSES)
    def analyze(req: AnalyzeRequest) -> dict:
        scheme = parse_code_file(req.code).to_scheme()
        return analyze_report(scheme, req.subsets)

    @app.post("/distances", responses=ERROR_RESPONSES)
    def distances(req: DistancesRequest) -> dict:
        scheme = parse_code_file(req.code).to_scheme()
        return distances_report(scheme, req.max_i)

    @app.post("/simulate", responses=ERROR_RESPONSES)
    def simulate(req: SimulateRequest) -> dict:
        scheme = parse_code_file(req.code).to_scheme()
        return simulate_report(scheme)

    @app.post("/gv", responses=ERROR_RESPONSES)
    def gv(req: GVRequest) -> dict:
        return gv_report(GVQuery(req.q, req.n, req.k, req.delta_t, req.delta_r))

    @app.post("/gv-asym", responses=ERROR_RESPONSES)
    def gv_asym(req: GVAsymRequest) -> dict:
        return gv_asym_report(AsymptoticQuery(req.q, req.rate))

    @app.post("/search", responses=ERROR_RESPONSES)
    def search(req: SearchRequest) -> dict:
        query = GVQuery(req.q, req.n, req.k, req.delta_t, req.delta_r)
        return search_report(query, req.trials, req.seed)

    @app.post("/construct/rs", responses=ERROR_RESPONSES)
    def construct_rs(req: RSConstructRequest) -> dict:
        params = RSParams(field_from_order(req.q), req.k)
        return construct_report("rs", rs_scheme(params), {"q": req.q, "k": req.k})

    @app.post("/construct/css", responses=ERROR_RESPONSES)
    def construct_css(req: CSSConstructRequest) -> dict:
        _, _, c1, c2 = parse_classical_pair(req.pair_code, "C1", "C2")
        scheme = css_scheme(c1, c2, req.lagrangian)
        return construct_report("css", scheme, {"lagrangian": req.lagrangian})

    @app.post("/construct/hermitian", responses=ERROR_RESPONSES)
    def construct_hermitian(req: HermitianConstructRequest) -> dict:
        _, _, d, d_max = parse_classical_pair(req.pair_code, "D", "DMAX")
        return construct_report("hermitian", hermitian_scheme(d, d_max), {})

    return app


app = create_app()
