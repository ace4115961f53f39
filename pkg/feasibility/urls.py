from django.urls import path
from . import views

app_name = 'feasibility'

urlpatterns = [
    path('check/', views.check, name='check'),
]
