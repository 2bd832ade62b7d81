"""
API v1 module initialization
"""

from fastapi import APIRouter
from .permutations import router as permutations_router
from .verification import router as verification_router

# Create v1 API router
v1_router = APIRouter(prefix="/v1")

# Include all sub-routers
v1_router.include_router(permutations_router, prefix="/permutations", tags=["Permutations"])
v1_router.include_router(verification_router, tags=["Verification"])
