"""
URL configuration for the wlgraphons project.
"""
from django.contrib import admin
from django.urls import path, include
from rest_framework_simplejwt.views import TokenObtainPairView, TokenRefreshView

urlpatterns = [
    # Authentication
    path('api/auth/token/', TokenObtainPairView.as_view(), name='token_obtain_pair'),
    path('api/auth/token/refresh/', TokenRefreshView.as_view(), name='token_refresh'),

    # API endpoints
    path('api/graphons/', include('graphons.urls')),
    path('api/refinement/', include('refinement.urls')),
    path('api/feasibility/', include('feasibility.urls')),
    path('api/harness/', include('harness.urls')),

    # Admin
    path('admin/', admin.site.urls),
]
