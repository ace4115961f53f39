# Generated by Django 5.2.4 on 2026-10-18 09:12

import django.db.models.deletion
from django.conf import settings
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
        migrations.swappable_dependency(settings.AUTH_USER_MODEL),
    ]

    operations = [
        migrations.CreateModel(
            name='HarnessRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('suite', models.CharField(choices=[('colref', 'colref'), ('kwl', 'kwl'), ('graphon', 'graphon'), ('simple', 'simple')], max_length=20, verbose_name='Suite')),
                ('k', models.PositiveSmallIntegerField(default=1, verbose_name='k')),
                ('seed', models.IntegerField(default=0, verbose_name='Seed')),
                ('pair_count', models.PositiveIntegerField(default=0, verbose_name='Pairs')),
                ('include_curated', models.BooleanField(default=True, verbose_name='Include curated pairs')),
                ('status', models.CharField(choices=[('pending', 'Pending'), ('running', 'Running'), ('completed', 'Completed'), ('failed', 'Failed')], default='pending', max_length=20, verbose_name='Status')),
                ('error_message', models.TextField(blank=True, verbose_name='Error Message')),
                ('consistent_count', models.PositiveIntegerField(default=0, verbose_name='Consistent')),
                ('violation_count', models.PositiveIntegerField(default=0, verbose_name='Violations')),
                ('inconclusive_count', models.PositiveIntegerField(default=0, verbose_name='Inconclusive')),
                ('finding_count', models.PositiveIntegerField(default=0, verbose_name='Findings')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created At')),
                ('started_at', models.DateTimeField(blank=True, null=True, verbose_name='Started At')),
                ('completed_at', models.DateTimeField(blank=True, null=True, verbose_name='Completed At')),
                ('requested_by', models.ForeignKey(blank=True, null=True, on_delete=django.db.models.deletion.SET_NULL, related_name='harness_runs', to=settings.AUTH_USER_MODEL)),
            ],
            options={
                'verbose_name': 'Harness run',
                'verbose_name_plural': 'Harness runs',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='PairReport',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('pair_id', models.CharField(max_length=200, verbose_name='Pair')),
                ('classification', models.CharField(choices=[('consistent', 'Consistent'), ('theorem_violation', 'Violation'), ('inconclusive_budget', 'Inconclusive (budget)')], default='consistent', max_length=30, verbose_name='Classification')),
                ('fingerprint_equal', models.BooleanField(blank=True, null=True, verbose_name='Fingerprints equal')),
                ('first_difference', models.IntegerField(blank=True, null=True, verbose_name='First differing round')),
                ('verdicts', models.JSONField(default=dict, verbose_name='Verdicts')),
                ('details', models.TextField(blank=True, verbose_name='Details')),
                ('findings', models.JSONField(blank=True, default=list, verbose_name='Findings')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created At')),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='reports', to='harness.harnessrun')),
            ],
            options={
                'verbose_name': 'Pair report',
                'verbose_name_plural': 'Pair reports',
                'ordering': ['run', 'id'],
                'indexes': [models.Index(fields=['run', 'classification'], name='harness_report_run_class_idx')],
            },
        ),
    ]
