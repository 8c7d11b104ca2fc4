"""Stateless HTTP facade over the pipeline, for interactive what-if loops.

Routes (application/json):
    POST /api/v1/synthesize   scenario (+ optional inline costs/catalog/levels)
                              -> full synthesis result with per-flow costs
    POST /api/v1/validate     scenario -> validation report (200 even when invalid)
    GET  /api/v1/catalog      the catalog active in this process
    GET  /healthz             liveness probe, 200 "ok"

Error mapping: 400 malformed input, 413 oversized body, 422 scenario
validation failure (full report attached), 409 infeasible node. Identical
request bodies always produce byte-identical responses; the only process state
is the boot-time cost model and catalog, both immutable.
"""

from __future__ import annotations

import json
import os

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware

from . import io as docs
from .catalog import Catalog, default_catalog
from .costs import CostModel
from .scenario import InvalidScenarioError
from .synthesis import InfeasibleNodeError, synthesize

DEFAULT_MAX_BODY_BYTES = 10 * 1024 * 1024


class _ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, elements: list[str] | None = None, extra: dict | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.elements = elements or []
        self.extra = extra or {}


def _error_response(exc: _ApiError) -> Response:
    body = {"code": exc.code, "message": exc.message, "elements": exc.elements, **exc.extra}
    return Response(
        content=json.dumps(body, sort_keys=True, ensure_ascii=False),
        status_code=exc.status,
        media_type="application/json",
    )


def _json_body(raw: bytes) -> dict:
    try:
        doc = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise _ApiError(400, "malformed_input", f"request body is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise _ApiError(400, "malformed_input", "request body must be a JSON object")
    return doc


def _scenario_doc(body: dict) -> dict:
    # accept either an envelope {"scenario": {...}, ...} or a bare scenario document
    doc = body.get("scenario", body)
    if not isinstance(doc, dict):
        raise _ApiError(400, "invalid_document", "scenario must be a JSON object")
    return doc


def create_app(
    cost_model: CostModel | None = None,
    catalog: Catalog | None = None,
    cors_origin: str | None = None,
    max_body_bytes: int = DEFAULT_MAX_BODY_BYTES,
) -> FastAPI:
    boot_model = cost_model if cost_model is not None else CostModel()
    boot_catalog = catalog if catalog is not None else default_catalog()
    origin = cors_origin or os.environ.get("ARCHSYNTH_CORS_ORIGIN", "*")
    catalog_bytes = docs.serialize_catalog(boot_catalog)

    app = FastAPI(title="archsynth", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin],
        allow_methods=["GET", "POST", "HEAD"],
        allow_headers=["*"],
    )

    @app.exception_handler(_ApiError)
    async def handle_api_error(_: Request, exc: _ApiError) -> Response:
        return _error_response(exc)

    async def _read_body(request: Request) -> bytes:
        raw = await request.body()
        if len(raw) > max_body_bytes:
            raise _ApiError(413, "body_too_large", f"request body exceeds {max_body_bytes} bytes")
        return raw

    def _parse_inputs(body: dict) -> tuple:
        levels = docs.DEFAULT_LEVELS
        if "levels" in body:
            try:
                levels = docs.parse_levels(body["levels"])
            except docs.SchemaError as exc:
                raise _ApiError(400, "invalid_document", str(exc)) from None
        try:
            scenario = docs.parse_scenario(json.dumps(_scenario_doc(body)), levels)
        except docs.SchemaError as exc:
            raise _ApiError(400, "invalid_document", str(exc)) from None
        except InvalidScenarioError as exc:
            raise _ApiError(
                422,
                "invalid_scenario",
                str(exc),
                elements=sorted({v.element for v in exc.report.violations if v.element}),
                extra=docs.report_to_doc(exc.report),
            ) from None
        model = boot_model
        if "costs" in body:
            try:
                model = docs.parse_cost_model(json.dumps(body["costs"]))
            except docs.SchemaError as exc:
                raise _ApiError(400, "invalid_document", str(exc)) from None
        cat = boot_catalog
        if "catalog" in body:
            try:
                cat = docs.parse_catalog(json.dumps(body["catalog"]))
            except docs.SchemaError as exc:
                raise _ApiError(400, "invalid_document", str(exc)) from None
        return scenario, model, cat

    @app.post("/api/v1/synthesize")
    async def handle_synthesize(request: Request) -> Response:
        body = _json_body(await _read_body(request))
        scenario, model, cat = _parse_inputs(body)
        try:
            result = synthesize(scenario, model=model, catalog=cat)
        except InfeasibleNodeError as exc:
            raise _ApiError(409, "infeasible_node", str(exc), elements=[exc.node]) from None
        return Response(content=docs.serialize_result(result), media_type="application/json")

    @app.post("/api/v1/validate")
    async def handle_validate(request: Request) -> Response:
        body = _json_body(await _read_body(request))
        levels = docs.DEFAULT_LEVELS
        if "levels" in body:
            try:
                levels = docs.parse_levels(body["levels"])
            except docs.SchemaError as exc:
                raise _ApiError(400, "invalid_document", str(exc)) from None
        try:
            _, report = docs.parse_scenario_lenient(json.dumps(_scenario_doc(body)), levels)
        except docs.SchemaError as exc:
            raise _ApiError(400, "invalid_document", str(exc)) from None
        return Response(content=docs.serialize_report(report), media_type="application/json")

    @app.api_route("/api/v1/catalog", methods=["GET", "HEAD"])
    async def handle_catalog(request: Request) -> Response:
        if request.method == "HEAD":
            return Response(media_type="application/json")
        return Response(content=catalog_bytes, media_type="application/json")

    @app.get("/healthz")
    async def healthz() -> Response:
        return Response(content="ok", media_type="text/plain")

    return app
