from django.contrib import admin
from django.utils.translation import gettext_lazy as _
from django.utils.html import format_html
from django.urls import reverse
from unfold.admin import ModelAdmin, TabularInline
from import_export.admin import ImportExportModelAdmin
from import_export import resources
from .models import HarnessRun, PairReport


class PairReportResource(resources.ModelResource):
    """Resource for exporting pair reports"""

    class Meta:
        model = PairReport
        fields = (
            'id', 'run__suite', 'run__k', 'run__seed', 'pair_id', 'seed', 'classification',
            'fingerprint_equal', 'first_difference', 'verdicts', 'details', 'findings'
        )


class PairReportInline(TabularInline):
    """Inline for the reports of a run"""
    model = PairReport
    extra = 0
    fields = ('pair_id', 'seed', 'classification', 'fingerprint_equal', 'first_difference')
    readonly_fields = fields
    can_delete = False
    show_change_link = True


@admin.register(HarnessRun)
class HarnessRunAdmin(ModelAdmin):
    """Harness run admin"""

    inlines = [PairReportInline]

    list_display = [
        'id', 'suite', 'k', 'seed', 'pair_count', 'get_status_badge',
        'consistent_count', 'violation_count', 'inconclusive_count', 'finding_count', 'created_at'
    ]
    list_filter = ['suite', 'k', 'status', 'created_at']
    readonly_fields = [
        'status', 'error_message', 'consistent_count', 'violation_count', 'inconclusive_count',
        'finding_count', 'created_at', 'started_at', 'completed_at', 'get_reports_link'
    ]

    fieldsets = (
        (_('Run'), {
            'fields': ('suite', 'k', 'seed', 'pair_count', 'include_curated', 'requested_by')
        }),
        (_('Outcome'), {
            'fields': (
                'status', 'error_message', 'consistent_count', 'violation_count',
                'inconclusive_count', 'finding_count', 'get_reports_link'
            )
        }),
        (_('Metadata'), {
            'fields': ('created_at', 'started_at', 'completed_at'),
            'classes': ['collapse']
        }),
    )

    def get_status_badge(self, obj):
        """Get colored status badge"""
        colors = {
            'pending': '#6c757d',
            'running': '#007bff',
            'completed': '#28a745',
            'failed': '#dc3545',
        }
        color = '#dc3545' if obj.has_violations else colors.get(obj.status, '#6c757d')
        return format_html(
            '<span style="background-color: {}; color: white; padding: 2px 8px; border-radius: 3px; font-size: 11px;">{}</span>',
            color, obj.get_status_display()
        )

    get_status_badge.short_description = _('Status')
    get_status_badge.admin_order_field = 'status'

    def get_reports_link(self, obj):
        if not obj.pk:
            return '-'
        url = reverse('admin:harness_pairreport_changelist') + f'?run__id__exact={obj.id}'
        return format_html('<a href="{}">{} reports</a>', url, obj.reports.count())

    get_reports_link.short_description = _('Reports')


@admin.register(PairReport)
class PairReportAdmin(ModelAdmin, ImportExportModelAdmin):
    resource_class = PairReportResource

    list_display = ['pair_id', 'run', 'classification', 'fingerprint_equal', 'first_difference']
    list_filter = ['classification', 'run__suite', 'run__k', 'fingerprint_equal']
    search_fields = ['pair_id', 'details']
    readonly_fields = [
        'run', 'pair_id', 'classification', 'fingerprint_equal', 'first_difference',
        'verdicts', 'details', 'findings', 'created_at'
    ]
