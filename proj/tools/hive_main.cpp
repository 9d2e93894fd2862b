#include "hive/cli/cli.hpp"

int main(int argc, char** argv) {
  return hive::cli::run(argc, argv);
}
