from django.apps import AppConfig


class TournamentsConfig(AppConfig):
    name = 'tournaments'
    verbose_name = '3-tournament domination toolkit'
