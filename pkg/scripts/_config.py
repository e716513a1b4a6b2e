"""Build an argparse front end from a dataclass of experiment settings."""

import argparse
import dataclasses


def parse_config(cls, argv=None, description=None):
    ap = argparse.ArgumentParser(description=description)
    for f in dataclasses.fields(cls):
        default = f.default
        flag = "--" + f.name.replace("_", "-")
        if isinstance(default, tuple):
            ap.add_argument(flag, type=type(default[0]), nargs="+", default=list(default))
        else:
            ap.add_argument(flag, type=type(default), default=default)
    ns = ap.parse_args(argv)
    kw = {k: tuple(v) if isinstance(v, list) else v for k, v in vars(ns).items()}
    return cls(**kw)
