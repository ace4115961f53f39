# Generated by Django 5.2.4 on 2026-10-18 14:30

from django.db import migrations, models


class Migration(migrations.Migration):

    dependencies = [
        ('harness', '0001_initial'),
    ]

    operations = [
        migrations.AddField(
            model_name='pairreport',
            name='seed',
            field=models.BigIntegerField(blank=True, help_text='Seed of a generated pair; empty for curated pairs', null=True, verbose_name='Pair seed'),
        ),
    ]
