"""
Helpers shared by the command tests
"""
import json
import shutil
import tempfile
from pathlib import Path

from graphons.serialization import multigraph_to_dict, step_graphon_to_dict
from graphons.structures import MultiGraph


class DocumentFilesMixin:
    """Writes graph and step graphon documents into a per-test temporary directory"""

    def setUp(self):
        super().setUp()
        self.document_dir = Path(tempfile.mkdtemp(prefix='wlgraphons-'))
        self.addCleanup(shutil.rmtree, self.document_dir, ignore_errors=True)

    def write_document(self, name, obj) -> str:
        if isinstance(obj, MultiGraph):
            document = multigraph_to_dict(obj)
        elif isinstance(obj, dict):
            document = obj
        else:
            document = step_graphon_to_dict(obj)
        path = self.document_dir / f"{name}.json"
        path.write_text(json.dumps(document), encoding='utf-8')
        return str(path)
