#include "sbn/corpus.hpp"

#include <fstream>
#include <sstream>

#include "sbn/error.hpp"

namespace sbn {

namespace {

bool blank_line(const std::string& line) {
    for (char c : line)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

} // namespace

std::vector<std::string> split_documents(const std::string& corpus_text) {
    std::vector<std::string> documents;
    std::string current;
    bool in_document = false;

    std::istringstream in(corpus_text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank_line(line)) {
            if (in_document) {
                documents.push_back(current);
                current.clear();
                in_document = false;
            }
            continue;
        }
        if (in_document) current.push_back('\n');
        current += line;
        in_document = true;
    }
    if (in_document) documents.push_back(current);
    return documents;
}

std::string join_documents(const std::vector<std::string>& documents) {
    std::string out;
    for (size_t i = 0; i < documents.size(); ++i) {
        if (i) out += "\n";
        out += documents[i];
        out += "\n";
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

std::vector<std::string> read_corpus_file(const std::string& path) {
    return split_documents(read_text_file(path));
}

} // namespace sbn
