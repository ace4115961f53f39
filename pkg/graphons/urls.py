"""
URL patterns for graphon views
"""
from django.urls import path
from . import views

app_name = 'graphons'

urlpatterns = [
    path('density/', views.density, name='density'),
    path('term-density/', views.term_density_view, name='term_density'),
    path('stored/', views.stored_graphons, name='stored_graphons'),
]
