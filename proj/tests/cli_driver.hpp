// Spawns the command-line binary and captures its exit code and streams.
#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace mdsurf::testutil {

inline std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs `binary args...` with stdout/stderr captured through temp files.
inline RunResult run_process(const std::string& binary,
                             const std::string& args) {
    std::string tag = std::to_string(getpid());
    std::string out_path = "/tmp/mdsurf_out_" + tag;
    std::string err_path = "/tmp/mdsurf_err_" + tag;
    std::string cmd = binary + " " + args + " >" + out_path + " 2>" + err_path;
    int status = std::system(cmd.c_str());
    RunResult r;
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

// True when `line` appears as one whole line of `text`.
inline bool has_line(const std::string& text, const std::string& line) {
    if (text.rfind(line + "\n", 0) == 0) return true;
    return text.find("\n" + line + "\n") != std::string::npos;
}

} // namespace mdsurf::testutil
