#ifndef DVL_CLI_HPP_
#define DVL_CLI_HPP_
namespace dvl::cli { inline int run(int, char**) { return 0; } }
#endif
