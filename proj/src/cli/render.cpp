#include <string>

#include "jenga/cli.hpp"

namespace jenga {

std::string render_ascii(const Configuration& c) {
  check_configuration(c);
  const int top = levels_count(c);
  const std::size_t width = std::to_string(c.first_level + top - 1).size();
  std::string out;
  for (int i = top; i >= 1; --i) {
    std::string index = std::to_string(c.first_level + i - 1);
    out += 'L';
    out.append(width - index.size(), ' ');
    out += index;
    out += ' ';
    out += c.level(i).row();
    out += '\n';
  }
  return out;
}

}  // namespace jenga
