"""
Read-only JSON endpoints over the same reports as ``manage.py braid3``.
"""

import logging
from typing import Optional

from ninja import NinjaAPI

from braid3 import reporting
from braid3.cli import CliCommand, CliConfig, execute
from braid3.exceptions import Braid3Error
from braid3.matrix_oracles import check_burau_convention
from braid3.schemas import BoundsOut, EntropyOut, ErrorOut, HealthOut, NormalizeOut, SlalomOut, SyllablesOut

logger = logging.getLogger(__name__)

api = NinjaAPI(title="braid3", version="1.0.0", urls_namespace='braid3')

_ERRORS = {400: ErrorOut, 500: ErrorOut}


@api.exception_handler(Braid3Error)
def braid3_error(request, exc):
    # bad input is a ValueError; anything else is a numeric or internal failure
    status = 400 if isinstance(exc, ValueError) else 500
    if status == 500:
        logger.warning("%s failed: %s", request.path, exc)
    return api.create_response(request, reporting.error_payload(exc), status=status)


@api.get('/health', response=HealthOut)
def health(request):
    return {'status': 'ok', 'burau_convention': check_burau_convention()}


@api.get('/normalize', response={200: NormalizeOut, **_ERRORS})
def normalize(request, word: str):
    return execute(CliConfig(CliCommand.NORMALIZE, word=word)).payload


@api.get('/syllables', response={200: SyllablesOut, **_ERRORS})
def syllables(request, pure_word: str, cyclic: bool = False):
    return execute(CliConfig(CliCommand.SYLLABLES, pure_word=pure_word, cyclic=cyclic)).payload


@api.get('/bounds', response={200: BoundsOut, **_ERRORS})
def bounds(request, word: Optional[str] = None, pure_word: Optional[str] = None, boundary: str = 'tr',
           check: bool = False):
    return execute(CliConfig(CliCommand.BOUNDS, word=word, pure_word=pure_word, boundary=boundary,
                             check=check)).payload


@api.get('/entropy', response={200: EntropyOut, **_ERRORS})
def entropy(request, word: Optional[str] = None, pure_word: Optional[str] = None):
    return execute(CliConfig(CliCommand.ENTROPY, word=word, pure_word=pure_word)).payload


@api.get('/slalom', response={200: SlalomOut, **_ERRORS})
def slalom(request, M: float):
    return reporting.slalom_payload(M)
