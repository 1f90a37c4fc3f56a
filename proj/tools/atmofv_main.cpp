#include "atmofv/app.hpp"

int main(int argc, char** argv) { return atmofv::main_entry(argc, argv); }
