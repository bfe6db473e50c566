// Regenerates data/catalog.jsonl from the built-in constructions.
// Usage: make_catalog > data/catalog.jsonl

#include <iostream>

#include "curveaut/catalog.hpp"

int main() {
    curveaut::write_builtin_catalog(std::cout);
    return 0;
}
