"""Bundled example programs, addressable by file stem."""

from importlib import resources


def names():
    return sorted(p.name[:-4] for p in resources.files(__name__).iterdir()
                  if p.name.endswith(".imp"))


def source(name: str) -> str:
    if name not in names():
        raise KeyError(f"no bundled program named {name!r}")
    return resources.files(__name__).joinpath(name + ".imp").read_text(encoding="utf-8")
