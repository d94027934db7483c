"""Writes the bench corpus, its inferred configurations and the expected outcome.

Each entry pairs a one-module project with an inferred dependency list. The
expected outcome is fixed by construction against tests/fixtures/index/snapshot.json.
"""
import json
import os
import shutil

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "fixtures", "bench")

MVC = "try:\n    import ujson as json\nexcept ImportError:\n    import simplejson as json\n"
MONITOR = "from gym.wrappers.monitor import Monitor\n"

# (source, inferred deps, inferred python, expected kind or None)
ENTRIES = [
    ("import six\n", ["six"], None, None),
    ("import requests\n", ["requests"], "3.8", None),
    ("import yaml\n", ["pyyaml"], None, None),
    ("import urllib3\n", ["urllib3"], "3.9", None),
    ("import celery\n", ["celery"], None, None),
    ("import flask\n", ["flask", "markupsafe<2.1"], None, None),
    ("import pandas\n", ["pandas"], None, None),
    (MVC, ["simplejson"], None, None),
    ("import cloudpickle\n", ["cloudpickle"], "3.10", None),
    (MONITOR, ["gym<0.23.0"], None, None),
    ("import urllib3\nimport idna\n", ["requests"], None, None),
    ("import jinja2\n", ["jinja2", "markupsafe<2.1"], None, None),
    ("import zipp\n", ["zipp"], None, None),
    ("import celery\n", [], None, "MissingDirectImportDeps"),
    ("import keras\n", ["keras"], None, "MissingIndirectImportModules"),
    (MONITOR, ["gym"], None, "DirectImportInconsistentWithInstalled"),
    ("import trading_calendars\n", ["trading-calendars"], None, "OtherImportRuntimeError"),
    ("import os\n", ["enum>=1.1.5"], None, "SetupDependencyConflict"),
    ("import zipp\n", ["zipp"], "2.7", "IncorrectPythonVersion"),
    ("import multipart\n", ["multipart"], None, "VersionDateInconsistency"),
]


def main():
    corpus = os.path.join(OUT, "corpus")
    shutil.rmtree(corpus, ignore_errors=True)
    inferred, expected = [], {}
    for i, (source, deps, python, kind) in enumerate(ENTRIES, 1):
        name = "lib%02d" % i
        root = os.path.join(corpus, name + "-1.0.0")
        os.makedirs(os.path.join(root, name))
        with open(os.path.join(root, "setup.cfg"), "w") as f:
            f.write("[metadata]\nname = %s\nversion = 1.0.0\n\n[options]\npython_requires = >=3.6\n" % name)
        with open(os.path.join(root, name, "__init__.py"), "w") as f:
            f.write(source)
        entry = {"name": name, "version": "1.0.0", "inferred_deps": deps}
        if python is not None:
            entry["inferred_python"] = python
        inferred.append(entry)
        expected[name] = kind
    validated = sum(1 for k in expected.values() if k is None)
    with open(os.path.join(OUT, "inferred.json"), "w") as f:
        json.dump(inferred, f, indent=2)
        f.write("\n")
    with open(os.path.join(OUT, "expected.json"), "w") as f:
        json.dump({"total": len(ENTRIES), "validated": validated, "pass_rate": "%.3f" % (validated / len(ENTRIES)),
                   "kinds": expected}, f, indent=2, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
