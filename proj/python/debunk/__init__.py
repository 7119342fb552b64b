"""Python access to the debunking-tweet archive core.

Pattern matching, WMD, transport and kappa are plain functions; ``Archive``
wraps one SQLite archive (crawl, archive a day, read, vote, export).
"""

import json

from ._core import (
    Error,
    cohen_kappa,
    default_config_text,
    expand_alternations,
    match,
    solve_transport,
    wmd,
)
from ._core import Archive as _Archive

__all__ = [
    "Archive",
    "Error",
    "cohen_kappa",
    "default_config_text",
    "expand_alternations",
    "match",
    "solve_transport",
    "wmd",
]


class Archive(_Archive):
    def top_clusters(self, date, lang, limit=10):
        return json.loads(self._top_clusters(date, lang, limit))

    def cluster(self, cluster_id):
        text = self._cluster(cluster_id)
        return None if text is None else json.loads(text)

    def export_records(self, date_from, date_to, lang):
        return [json.loads(line) for line in self.export(date_from, date_to, lang).splitlines()]
