from gnomon.cli.exitcodes import EXIT_OK
from gnomon.corpus import SUFFIX, corpus_names


def list_corpus() -> int:
    for name in corpus_names():
        print(f"{name}{SUFFIX}")
    return EXIT_OK
