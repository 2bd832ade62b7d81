"""
permstats API - HTTP surface over the permutation statistics engine
"""

import os
from contextlib import asynccontextmanager
from datetime import datetime, timezone

import uvicorn
from fastapi import FastAPI
from fastapi.responses import Response

from api.v1 import v1_router
from schemas.responses import HealthResponse
from utils.config import get_config
from utils.config_bootstrap import validate_config_on_startup
from utils.error_handler import register_exception_handlers
from utils.metrics_collector import metrics
from utils.response_envelope import format_success_response
from utils.structured_logging import get_structured_logger, setup_structured_logging

logger = get_structured_logger(__name__)

SERVICE_NAME = "permstats"
SERVICE_VERSION = "1.0.0"


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan with fail-fast validation and logging setup"""
    try:
        validate_config_on_startup()
    except SystemExit:
        logger.error("Configuration validation failed - aborting startup")
        raise

    config = get_config()
    setup_structured_logging(config.log_level, config.log_format)
    logger.info("Starting permstats API", environment=config.environment,
                exhaustive_degree_cap=config.exhaustive_degree_cap)

    yield

    logger.info("Application shutting down")


app = FastAPI(
    title="permstats API",
    description="Permutation statistics, canonical presentations, Foata-type bijections "
                "and exhaustive equidistribution checks",
    version=SERVICE_VERSION,
    docs_url="/docs",
    redoc_url="/redoc",
    lifespan=lifespan,
    openapi_tags=[
        {"name": "Permutations", "description": "Statistics, presentations and bijections"},
        {"name": "Verification", "description": "Exhaustive theorem checks and distribution tables"},
        {"name": "Health", "description": "System health and monitoring"},
    ],
)

register_exception_handlers(app)
app.include_router(v1_router, prefix="/api")


@app.get("/metrics", include_in_schema=False)
async def get_metrics():
    """Prometheus metrics endpoint"""
    return Response(metrics.render(), media_type=metrics.content_type)


@app.get("/health", tags=["Health"])
async def health_check() -> dict:
    config = get_config()
    health = HealthResponse(
        status="healthy",
        service=SERVICE_NAME,
        version=SERVICE_VERSION,
        timestamp=datetime.now(timezone.utc),
        environment=config.environment,
        limits={
            "exhaustive_degree_cap": config.exhaustive_degree_cap,
            "slow_degree_cap": config.slow_degree_cap,
            "avoider_degree_cap": config.avoider_degree_cap,
        },
    )
    return format_success_response(health.model_dump(mode="json"))


@app.get("/", tags=["Health"])
async def root():
    """Basic API information and navigation links"""
    return format_success_response({
        "message": "permstats API",
        "version": SERVICE_VERSION,
        "docs": "/docs",
        "health": "/health",
        "metrics": "/metrics",
        "api_base": "/api/v1",
    })


if __name__ == "__main__":
    uvicorn.run(
        "main:app",
        host="0.0.0.0",
        port=int(os.getenv("PORT", 8000)),
        reload=get_config().environment == "development",
    )
