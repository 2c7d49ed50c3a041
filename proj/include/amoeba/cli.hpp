#ifndef AMOEBA_CLI_HPP
#define AMOEBA_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

#include "amoeba/graph.hpp"

namespace amoeba {

// Inline construction grammar:
//   path:N  cycle:N  complete:N  star:N  hn:N  fib:I
//   compose:GFILE,HFILE,ROOT[,i1-i2-...]
//   power:HFILE,ROOT,K
// Files hold graph6 or edge-list text.
Graph construct_from_spec(const std::string& spec);
RootedGraph rooted_construct_from_spec(const std::string& spec, int root);

// Exit codes: 0 success, 1 domain error, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace amoeba

#endif // AMOEBA_CLI_HPP
