from django.apps import AppConfig


class Gl2repConfig(AppConfig):
    name = "apps.gl2rep"
    verbose_name = "GL2 지표와 힐베르트 급수"
