import os
import shutil
import unittest
from pathlib import Path
from unittest.mock import patch

from pydantic import ValidationError

from crepant_potential.models.report import Suite
from crepant_potential.services.potentials import Part
from crepant_potential.settings import Settings

from .concerns import write_config


class SettingsTest(unittest.TestCase):
    def setUp(self) -> None:
        self.base_path = Path(__file__).parent / 'out_settings'
        self.base_path.mkdir(exist_ok=True)

    def test_defaults(self):
        config = Settings()
        self.assertEqual((3, 5, 3), (config.qmax, config.zorder, config.uorder))
        self.assertEqual([Suite.ALL], config.suites)
        self.assertEqual(1, config.Processor.nb_worker)
        self.assertIsNone(config.Logger)

    def test_file_then_overrides(self):
        config_path = write_config(self.base_path, {'qmax': 6, 'zorder': 8, 'suites': ['bracket'], 'Processor': {'nb_worker': 4}})
        config = Settings.load(config_path, qmax=2, zorder=None, part=Part.QUANTUM)
        self.assertEqual(2, config.qmax)
        self.assertEqual(8, config.zorder)
        self.assertEqual([Suite.BRACKET], config.suites)
        self.assertEqual(Part.QUANTUM, config.part)
        self.assertEqual(4, config.Processor.nb_worker)

    def test_validation(self):
        with self.assertRaises(ValidationError):
            Settings(qmax=-1)
        with self.assertRaises(ValidationError):
            Settings.load(write_config(self.base_path, {'qcap': 2}))
        with self.assertRaises(ValidationError):
            Settings(suites=['nonsense'])

    def test_environment_is_ignored(self):
        with patch.dict(os.environ, {'QMAX': '7', 'qmax': '7'}):
            self.assertEqual(3, Settings().qmax)

    def tearDown(self) -> None:
        shutil.rmtree(self.base_path)
