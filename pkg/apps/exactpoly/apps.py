from django.apps import AppConfig


class ExactpolyConfig(AppConfig):
    name = "apps.exactpoly"
    verbose_name = "유리수 계수 희소 다항식"
