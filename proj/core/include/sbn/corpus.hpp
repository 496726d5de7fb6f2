#pragma once

#include <string>
#include <vector>

namespace sbn {

// A corpus file is a sequence of documents separated by blank lines; one
// document is a run of consecutive non-blank lines. Order is significant,
// document index = corpus position.
std::vector<std::string> split_documents(const std::string& corpus_text);

std::string join_documents(const std::vector<std::string>& documents);

// Throws IoError when the file cannot be read/written.
std::vector<std::string> read_corpus_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace sbn
