from django.conf import settings

DEFAULTS = {
    'SEED': 20240611,
    'TOLERANCE': 1e-10,
    'AUDIT_SAMPLES': 10000,
    'GRID_STEP': 1 / 144,
    'WORKERS': 1,
}


def get_setting(name):
    """Read a key of ``settings.BRAID3``, falling back to the package default."""
    configured = getattr(settings, 'BRAID3', {}) or {}
    if name in configured and configured[name] is not None:
        return configured[name]
    return DEFAULTS[name]


def seed_override():
    """The seed configured through the environment, which takes precedence over ``--seed``."""
    configured = getattr(settings, 'BRAID3', {}) or {}
    return configured.get('SEED')
