import json
import os
import sys


def load_json(path: str):
    """
    * path: a file path, or `-` to read from stdin
    """
    if path == "-":
        return json.load(sys.stdin)

    with open(path, encoding="utf-8") as f:
        return json.load(f)


def dumps_canonical(data) -> str:
    "Byte-stable JSON: sorted keys, fixed indentation, trailing newline."
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def save_json(data, path: str):
    """
    * data: a JSON-serializable object
    * path: a file path, or `-` to write to stdout
    """
    text = dumps_canonical(data)
    if path == "-":
        sys.stdout.write(text)
        return

    dir_path = os.path.dirname(path)
    if dir_path:
        os.makedirs(dir_path, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
