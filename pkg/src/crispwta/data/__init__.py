"""Example automata and Mealy machines shipped with the package."""

from importlib import resources


def example_path(name: str) -> str:
    return str(resources.files(__name__).joinpath(name))


def example_names() -> list[str]:
    return sorted(p.name for p in resources.files(__name__).iterdir()
                  if p.name.endswith((".wta", ".mealy", ".step")))


def load_example(name: str):
    """Load a shipped example by file name, e.g. ``"sizemod2.wta"``."""
    from ..fileformat import load_stepmap, parse_mealy, parse_wta
    if name.endswith(".step"):
        return load_stepmap(example_path(name))
    text = resources.files(__name__).joinpath(name).read_text(encoding="utf-8")
    return parse_mealy(text) if name.endswith(".mealy") else parse_wta(text)
