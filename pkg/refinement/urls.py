from django.urls import path
from . import views

app_name = 'refinement'

urlpatterns = [
    path('compare/', views.compare_view, name='compare'),
]
