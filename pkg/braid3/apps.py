from django.apps import AppConfig


class Braid3Config(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'braid3'
    verbose_name = '3-braid invariants'
