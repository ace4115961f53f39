import logging

from django.conf import settings
from django.test import SimpleTestCase

from feasibility.systems import decide_Lk
from graphons.structures import path_graph

APPS = ('graphons', 'algebra', 'refinement', 'feasibility', 'harness')


class LoggingConfigurationTests(SimpleTestCase):

    def test_app_loggers_follow_the_debug_switch(self):
        # the console handler level is derived from DEBUG the same way
        expected = settings.LOGGING['handlers']['console']['level']
        self.assertIn(expected, ('DEBUG', 'INFO'))
        for app in APPS:
            with self.subTest(app=app):
                self.assertEqual(settings.LOGGING['loggers'][app]['level'], expected)
                self.assertEqual(logging.getLogger(app).level, logging.getLevelName(expected))
        self.assertEqual(settings.LOGGING['handlers']['file']['level'], expected)

    def test_system_sizes_are_debug_records(self):
        with self.assertLogs('feasibility', level='DEBUG') as captured:
            decide_Lk(path_graph(3), path_graph(3), 2)
        messages = [record.getMessage() for record in captured.records if record.levelno == logging.DEBUG]
        self.assertTrue(any(message.startswith('Built L^2') for message in messages))
        self.assertTrue(any('orbits' in message for message in messages))
