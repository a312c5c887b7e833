// Catch2 v3 amalgamated translation unit; keeps the test binaries small to
// rebuild.
#include <catch2/catch_amalgamated.cpp>
