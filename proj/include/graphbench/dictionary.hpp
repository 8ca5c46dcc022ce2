// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace graphbench {

// Case-insensitive English word list used to reject meaningful labels.
class Dictionary {
public:
    explicit Dictionary(const std::vector<std::string>& words);

    static Dictionary load_file(const std::string& path);

    // Bundled list; override the path with GRAPHBENCH_WORDS.
    static const Dictionary& standard();

    bool contains(std::string_view word) const;
    std::size_t size() const { return words_.size(); }

private:
    std::unordered_set<std::string> words_;
};

}  // namespace graphbench
