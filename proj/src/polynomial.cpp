#include "burkhardt/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace burkhardt {

namespace {

// Splits "x12" into ("x", 12) so indexed names sort numerically.
std::pair<std::string, long> split_index(const std::string& name) {
    std::size_t k = name.size();
    while (k > 0 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) --k;
    if (k == name.size() || name.size() - k > 9) return {name, -1};
    return {name.substr(0, k), std::stol(name.substr(k))};
}

}  // namespace

std::vector<std::string> scan_variable_names(std::string_view text) {
    std::set<std::string> found;
    int depth = 0;
    for (std::size_t i = 0; i < text.size();) {
        const char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        // parenthesized groups are coefficients and may contain z, s or t
        if (depth == 0 && (std::isalpha(static_cast<unsigned char>(c)) || c == '_')) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
                ++j;
            }
            found.emplace(text.substr(i, j - i));
            i = j;
            continue;
        }
        ++i;
    }
    std::vector<std::string> names(found.begin(), found.end());
    std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
        return split_index(a) < split_index(b);
    });
    return names;
}

}  // namespace burkhardt
