#define CATCH_CONFIG_MAIN
#include <catch2/catch_amalgamated.hpp>
#include <catch2/catch_amalgamated.cpp>
