// SPDX-License-Identifier: Apache-2.0
#include "graphbench/dictionary.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace graphbench {

namespace {

std::string lowered(std::string_view word) {
    std::string out(word);
    for (char& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

Dictionary::Dictionary(const std::vector<std::string>& words) {
    for (const auto& w : words)
        if (!w.empty())
            words_.insert(lowered(w));
    if (words_.empty())
        throw std::runtime_error("dictionary is empty");
}

Dictionary Dictionary::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open word list: " + path);
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (!line.empty())
            words.push_back(line);
    }
    return Dictionary(words);
}

const Dictionary& Dictionary::standard() {
    static const Dictionary dict = [] {
        if (const char* env = std::getenv("GRAPHBENCH_WORDS"))
            return load_file(env);
        return load_file(std::string(GRAPHBENCH_DATA_DIR) + "/words.txt");
    }();
    return dict;
}

bool Dictionary::contains(std::string_view word) const {
    return words_.contains(lowered(word));
}

}  // namespace graphbench
