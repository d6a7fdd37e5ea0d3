"""Pydantic request models for the HTTP service.

Responses reuse the frozen report dicts from :mod:`stabshare.report`
verbatim, so the service and the CLI emit byte-identical JSON payloads.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field


class AnalyzeRequest(BaseModel):
    code: str = Field(description="scheme code file text")
    subsets: Optional[list[list[int]]] = Field(
        default=None, description="1-based share subsets; omit for all subsets"
    )


class DistancesRequest(BaseModel):
    code: str
    max_i: Optional[int] = Field(default=None, ge=1)


class SimulateRequest(BaseModel):
    code: str


class GVRequest(BaseModel):
    q: int = Field(ge=2)
    n: int = Field(ge=1)
    k: int = Field(ge=1)
    delta_t: int = Field(ge=1)
    delta_r: int = Field(ge=1)


class GVAsymRequest(BaseModel):
    q: int = Field(ge=2)
    rate: float = Field(ge=0.0, le=1.0)


class SearchRequest(GVRequest):
    trials: int = Field(default=10_000, ge=1)
    seed: int = 0


class RSConstructRequest(BaseModel):
    q: int = Field(ge=2)
    k: int = Field(ge=2)


class CSSConstructRequest(BaseModel):
    pair_code: str = Field(description="pair file text with C1/C2 blocks")
    lagrangian: Literal["standard", "greedy"] = "standard"


class HermitianConstructRequest(BaseModel):
    pair_code: str = Field(description="pair file text with D/DMAX blocks")


class ErrorDetail(BaseModel):
    code: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorDetail
