// Copyright 2026 The Anonybench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "anonybench/normalize/transformer.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "anonybench/cparse/parser.h"
#include "anonybench/cparse/printer.h"
#include "anonybench/error.h"

namespace anonybench::normalize {

namespace fs = std::filesystem;

TransformerSpec ParseTechnique(std::string_view text) {
  TransformerSpec spec;
  if (text == "identity") {
    spec.kind = TransformerKind::kIdentity;
  } else if (text == "normalize") {
    spec.kind = TransformerKind::kBuiltinNormalize;
  } else if (text == "declue") {
    spec.kind = TransformerKind::kClueElimination;
  } else if (text.rfind("cmd:", 0) == 0) {
    spec.kind = TransformerKind::kExternalCommand;
    spec.command_template = std::string(text.substr(4));
    if (spec.command_template.empty()) {
      throw Error(ErrorKind::kParameter, "empty external command");
    }
  } else {
    throw Error(ErrorKind::kParameter,
                "unknown technique '" + std::string(text) +
                    "' (expected identity, normalize, declue or cmd:...)");
  }
  return spec;
}

std::string TechniqueName(const TransformerSpec& spec) {
  switch (spec.kind) {
    case TransformerKind::kIdentity: return "identity";
    case TransformerKind::kBuiltinNormalize: return "normalize";
    case TransformerKind::kClueElimination: return "declue";
    case TransformerKind::kExternalCommand: return "cmd:" + spec.command_template;
  }
  return "?";
}

bool IsBuiltin(const TransformerSpec& spec) {
  return spec.kind != TransformerKind::kExternalCommand;
}

std::string ShellQuote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

namespace {

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void SetNonBlocking(int fd) {
  ::fcntl(fd, F_SETFL, ::fcntl(fd, F_GETFL) | O_NONBLOCK);
}

std::string ReplaceAll(std::string s, const std::string& from,
                       const std::string& to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

class TempDir {
 public:
  TempDir() {
    std::string pattern = (fs::temp_directory_path() / "anonybench-XXXXXX").string();
    std::vector<char> buf(pattern.begin(), pattern.end());
    buf.push_back('\0');
    if (::mkdtemp(buf.data()) == nullptr) {
      throw Error(ErrorKind::kTransformer,
                  std::string("cannot create a working directory: ") +
                      std::strerror(errno));
    }
    path_ = buf.data();
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string Truncate(const std::string& s) {
  constexpr std::size_t kMax = 2000;
  return s.size() <= kMax ? s : s.substr(0, kMax) + "...";
}

std::string RunExternal(const std::string& source, const TransformerSpec& spec) {
  TempDir dir;
  const fs::path in = dir.path() / "input.c";
  const fs::path out = dir.path() / "output.c";
  {
    std::ofstream f(in, std::ios::binary);
    f << source;
  }
  const std::string& tmpl = spec.command_template;
  const bool has_in = tmpl.find("{in}") != std::string::npos;
  const bool has_out = tmpl.find("{out}") != std::string::npos;
  std::string cmd = ReplaceAll(ReplaceAll(tmpl, "{in}", ShellQuote(in.string())),
                               "{out}", ShellQuote(out.string()));
  CommandResult r =
      RunCommand(cmd, has_in ? std::string() : source, dir.path().string(), spec.timeout);
  if (r.timed_out) {
    throw Error(ErrorKind::kTransformer,
                "command timed out after " + std::to_string(spec.timeout.count()) +
                    " ms: " + tmpl);
  }
  if (r.exit_code != 0) {
    throw Error(ErrorKind::kTransformer,
                "command exited with status " + std::to_string(r.exit_code) +
                    ": " + tmpl + "\n" + Truncate(r.stderr_text));
  }
  std::string result;
  if (has_out) {
    std::ifstream f(out, std::ios::binary);
    std::stringstream ss;
    if (f) ss << f.rdbuf();
    result = ss.str();
  } else {
    result = r.stdout_text;
  }
  if (result.empty()) {
    throw Error(ErrorKind::kTransformer,
                "command produced no output: " + tmpl + "\n" + Truncate(r.stderr_text));
  }
  return result;
}

}  // namespace

CommandResult RunCommand(const std::string& command, const std::string& input,
                         const std::string& workdir,
                         std::chrono::milliseconds timeout) {
  IgnoreSigpipe();
  int in_pipe[2], out_pipe[2], err_pipe[2];
  if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0 || ::pipe(err_pipe) != 0) {
    throw Error(ErrorKind::kTransformer, "pipe() failed");
  }
  pid_t pid = ::fork();
  if (pid < 0) throw Error(ErrorKind::kTransformer, "fork() failed");
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(in_pipe[0], 0);
    ::dup2(out_pipe[1], 1);
    ::dup2(err_pipe[1], 2);
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0],
                   err_pipe[1]}) {
      ::close(fd);
    }
    if (!workdir.empty() && ::chdir(workdir.c_str()) != 0) ::_exit(127);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::close(err_pipe[1]);
  int in_fd = in_pipe[1];
  SetNonBlocking(in_fd);
  SetNonBlocking(out_pipe[0]);
  SetNonBlocking(err_pipe[0]);

  CommandResult result;
  std::size_t written = 0;
  if (input.empty()) {
    ::close(in_fd);
    in_fd = -1;
  }
  bool out_open = true, err_open = true;
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  char buf[65536];
  while (out_open || err_open) {
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      result.timed_out = true;
      break;
    }
    std::vector<pollfd> fds;
    if (out_open) fds.push_back({out_pipe[0], POLLIN, 0});
    if (err_open) fds.push_back({err_pipe[0], POLLIN, 0});
    if (in_fd >= 0) fds.push_back({in_fd, POLLOUT, 0});
    int rc = ::poll(fds.data(), fds.size(), static_cast<int>(left.count()));
    if (rc < 0 && errno == EINTR) continue;
    if (rc <= 0) continue;
    for (const pollfd& p : fds) {
      if (p.revents == 0) continue;
      if (p.fd == in_fd) {
        ssize_t n = ::write(in_fd, input.data() + written, input.size() - written);
        if (n > 0) written += static_cast<std::size_t>(n);
        if (n < 0 && errno != EAGAIN) written = input.size();
        if (written >= input.size()) {
          ::close(in_fd);
          in_fd = -1;
        }
        continue;
      }
      ssize_t n = ::read(p.fd, buf, sizeof buf);
      if (n > 0) {
        (p.fd == out_pipe[0] ? result.stdout_text : result.stderr_text)
            .append(buf, static_cast<std::size_t>(n));
      } else if (n == 0 || errno != EAGAIN) {
        (p.fd == out_pipe[0] ? out_open : err_open) = false;
      }
    }
  }
  if (in_fd >= 0) ::close(in_fd);
  ::close(out_pipe[0]);
  ::close(err_pipe[0]);
  if (result.timed_out) ::kill(-pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (WIFEXITED(status)) {
    result.exit_code = WEXITSTATUS(status);
  } else if (WIFSIGNALED(status)) {
    result.exit_code = 128 + WTERMSIG(status);
  }
  return result;
}

std::string TransformSource(const std::string& source, const TransformerSpec& spec) {
  try {
    switch (spec.kind) {
      case TransformerKind::kIdentity:
        return source;
      case TransformerKind::kBuiltinNormalize:
        return NormalizeSource(source, spec.normalize);
      case TransformerKind::kClueElimination:
        return EliminateCluesSource(source, spec.clues);
      case TransformerKind::kExternalCommand:
        return RunExternal(source, spec);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kTransformer) throw;
    throw Error(ErrorKind::kTransformer,
                TechniqueName(spec) + " failed: " + e.what());
  }
  return source;
}

corpus::Program Transform(const corpus::Program& program, const TransformerSpec& spec) {
  corpus::Program out = program;
  out.source = TransformSource(program.source, spec);
  out.stage = corpus::Stage::kTransformed;
  return out;
}

}  // namespace anonybench::normalize
