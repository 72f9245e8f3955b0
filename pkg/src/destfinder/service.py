"""HTTP service: a stateless recommendation API over a shared immutable atlas.

All data is loaded and validated before the app is constructed (fail-fast);
request handlers only read it, so any number of requests may run
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, PlainTextResponse, Response
from fastapi.staticfiles import StaticFiles

from .regions import LinkedAtlas, link_atlas, parse_geometry, parse_region_dataset
from .schemas import (
    PreferencesBody,
    RecommendResponse,
    build_recommend_response,
    build_regions_payload,
    format_violations,
)
from .scoring import DEFAULT_TOP_K


@dataclass(frozen=True)
class ServiceConfig:
    """Startup configuration; paths must exist and parse or the service refuses to start."""

    regions_path: Path
    geometry_path: Path
    listen_port: int = 8080
    static_dir: Path | None = None
    top_k: int = DEFAULT_TOP_K
    cors_origins: tuple[str, ...] = ()


def create_app(config: ServiceConfig) -> FastAPI:
    """Load and validate the atlas from disk, then build the application."""
    regions_bytes = config.regions_path.read_bytes()
    geometry_bytes = config.geometry_path.read_bytes()
    atlas = link_atlas(parse_region_dataset(regions_bytes), parse_geometry(geometry_bytes))
    return build_app(
        atlas,
        geometry_bytes,
        top_k=config.top_k,
        static_dir=config.static_dir,
        cors_origins=config.cors_origins,
    )


def build_app(
    atlas: LinkedAtlas,
    geometry_bytes: bytes,
    *,
    top_k: int = DEFAULT_TOP_K,
    static_dir: Path | None = None,
    cors_origins: tuple[str, ...] = (),
) -> FastAPI:
    """Build the application around an already-linked atlas.

    geometry_bytes is served verbatim by GET /api/v1/geometry so responses
    stay byte-identical to the source file.
    """
    app = FastAPI(title="destfinder", version="0.1.0")
    regions_payload = build_regions_payload(atlas.dataset)

    if cors_origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=list(cors_origins),
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.middleware("http")
    async def require_json_body(request: Request, call_next):
        if request.method == "POST" and request.url.path.startswith("/api/"):
            content_type = request.headers.get("content-type", "")
            if "application/json" not in content_type.lower():
                return JSONResponse(
                    status_code=415,
                    content={
                        "violations": [
                            {"field": "content-type", "message": "expected application/json"}
                        ]
                    },
                )
        return await call_next(request)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"violations": format_violations(exc.errors())})

    @app.get("/api/v1/regions")
    def get_regions():
        return JSONResponse(content=regions_payload)

    @app.get("/api/v1/geometry")
    def get_geometry():
        return Response(content=geometry_bytes, media_type="application/json")

    @app.post("/api/v1/recommend", response_model=RecommendResponse)
    def post_recommend(body: PreferencesBody):
        return build_recommend_response(atlas, body.to_domain(), top_k)

    @app.get("/healthz")
    def healthz():
        return PlainTextResponse("ok")

    if static_dir is not None:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
