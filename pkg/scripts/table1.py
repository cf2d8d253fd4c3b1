"""Print the realified AMUB table with measured gamma next to each bound."""
import argparse
import json
from dataclasses import asdict, dataclass

from amub.reports import render_table1, table1_json, table1_rows


@dataclass
class Config:
    max_q: int = 13
    max_p: int = 13
    json_out: str | None = None


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-q", type=int, default=Config.max_q)
    ap.add_argument("--max-p", type=int, default=Config.max_p)
    ap.add_argument("--json-out")
    cfg = Config(**vars(ap.parse_args()))
    rows = table1_rows(cfg.max_q, cfg.max_p)
    print(render_table1(rows))
    if cfg.json_out:
        with open(cfg.json_out, "w") as fh:
            json.dump({"config": asdict(cfg), "rows": table1_json(rows)}, fh, indent=2)


if __name__ == "__main__":
    main()
