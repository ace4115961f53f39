# Generated by Django 5.2.4 on 2026-10-18 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='StoredGraphon',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('name', models.CharField(max_length=200, unique=True, verbose_name='Name')),
                ('description', models.TextField(blank=True, verbose_name='Description')),
                ('document', models.JSONField(help_text='{"masses": [...], "weights": [[...]]} with "p/q" strings', verbose_name='Document')),
                ('steps', models.PositiveIntegerField(default=0, editable=False, verbose_name='Steps')),
                ('created_at', models.DateTimeField(auto_now_add=True, verbose_name='Created At')),
                ('updated_at', models.DateTimeField(auto_now=True, verbose_name='Updated At')),
            ],
            options={
                'verbose_name': 'Stored graphon',
                'verbose_name_plural': 'Stored graphons',
                'ordering': ['name'],
            },
        ),
    ]
