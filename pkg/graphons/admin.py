from django.contrib import admin
from django.utils.translation import gettext_lazy as _
from unfold.admin import ModelAdmin
from import_export.admin import ImportExportModelAdmin
from import_export import resources
from .models import StoredGraphon


class StoredGraphonResource(resources.ModelResource):
    """Resource for importing/exporting stored graphons"""

    class Meta:
        model = StoredGraphon
        import_id_fields = ('name',)
        fields = ('name', 'description', 'document')


@admin.register(StoredGraphon)
class StoredGraphonAdmin(ModelAdmin, ImportExportModelAdmin):
    resource_class = StoredGraphonResource

    list_display = ['name', 'steps', 'created_at', 'updated_at']
    search_fields = ['name', 'description']
    readonly_fields = ['steps', 'created_at', 'updated_at']

    fieldsets = (
        (_('Basic Information'), {
            'fields': ('name', 'description')
        }),
        (_('Step graphon'), {
            'fields': ('document', 'steps')
        }),
        (_('Metadata'), {
            'fields': ('created_at', 'updated_at'),
            'classes': ['collapse']
        }),
    )
