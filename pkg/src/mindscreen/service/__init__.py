from .app import DISCLAIMER, build_app_from_settings, create_app
from .config import ServiceSettings, load_settings
from .store import AssessmentStore, DuplicateConsentError, UnknownAssessmentError

__all__ = [
    "DISCLAIMER",
    "AssessmentStore",
    "DuplicateConsentError",
    "ServiceSettings",
    "UnknownAssessmentError",
    "build_app_from_settings",
    "create_app",
    "load_settings",
]
