// Source locations and the diagnostics channel shared by every pass.
#pragma once

#include <string>
#include <vector>

namespace ssrlint {

struct SourceLoc {
    std::string file;
    int line = 0;        // 1-based; 0 when unknown
    int byte_offset = -1;
    int length = 0;

    std::string str() const {
        return file + ":" + std::to_string(line);
    }
};

enum class Severity { Note, Warning, Error };

struct Diagnostic {
    Severity severity = Severity::Note;
    std::string code;     // short machine tag, e.g. "unresolved-base"
    std::string message;
    SourceLoc loc;
};

using Diagnostics = std::vector<Diagnostic>;

inline void diag(Diagnostics& sink, Severity sev, std::string code, std::string msg,
                 SourceLoc loc = {}) {
    sink.push_back(Diagnostic{sev, std::move(code), std::move(msg), std::move(loc)});
}

} // namespace ssrlint
