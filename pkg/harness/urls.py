"""
URL patterns for harness views
"""
from django.urls import path
from . import views

app_name = 'harness'

urlpatterns = [
    path('runs/', views.runs, name='runs'),
    path('runs/<int:run_id>/', views.run_detail, name='run_detail'),
]
