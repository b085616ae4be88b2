// Copyright 2026 The ExtEval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared value types, error reporting and UTF-8 helpers.
//
// All character offsets in this library are Unicode scalar-value indices.
// Text is held as std::u32string wherever offsets matter and converted to
// UTF-8 only at the I/O boundary.

#ifndef EXTEVAL_COMMON_H_
#define EXTEVAL_COMMON_H_

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exteval {

// Half-open character range [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - start; }
  bool empty() const { return start == end; }
  bool Contains(const Span& other) const {
    return start <= other.start && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

inline std::string ToString(const Span& span) {
  return "[" + std::to_string(span.start) + "," + std::to_string(span.end) +
         ")";
}

enum class ErrorCode {
  kNotExtractive,
  kAmbiguousMatch,
  kIndexOutOfRange,
  kSpanStraddlesUnits,
  kOutOfBounds,
  kSchemaError,
  kSpanMismatch,
  kMissingDoc,
  kEmptySummary,
  kMissingScores,
  kDuplicateCell,
  kNonNumeric,
  kLengthMismatch,
  kDimensionMismatch,
  kAllSkipped,
  kNoCandidate,
  kTooShort,
  kIoError,
  kUsage,
};

inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotExtractive: return "NotExtractive";
    case ErrorCode::kAmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kSpanStraddlesUnits: return "SpanStraddlesUnits";
    case ErrorCode::kOutOfBounds: return "OutOfBounds";
    case ErrorCode::kSchemaError: return "SchemaError";
    case ErrorCode::kSpanMismatch: return "SpanMismatch";
    case ErrorCode::kMissingDoc: return "MissingDoc";
    case ErrorCode::kEmptySummary: return "EmptySummary";
    case ErrorCode::kMissingScores: return "MissingScores";
    case ErrorCode::kDuplicateCell: return "DuplicateCell";
    case ErrorCode::kNonNumeric: return "NonNumeric";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kAllSkipped: return "AllSkipped";
    case ErrorCode::kNoCandidate: return "NoCandidate";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kUsage: return "Usage";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Non-fatal findings collected while loading or aligning. Under strict mode
// callers promote these to errors.
struct Diagnostic {
  ErrorCode code;
  std::string where;
  std::string message;

  std::string ToString() const {
    return where + ": " + ErrorCodeName(code) + ": " + message;
  }
};

using Diagnostics = std::vector<Diagnostic>;

namespace utf8 {

// Decodes UTF-8; malformed bytes become U+FFFD so offsets stay defined.
inline std::u32string Decode(std::string_view in) {
  std::u32string out;
  out.reserve(in.size());
  std::size_t i = 0;
  while (i < in.size()) {
    const auto c = static_cast<unsigned char>(in[i]);
    char32_t cp = 0;
    int extra = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      extra = 3;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + extra >= in.size()) {
      out.push_back(0xFFFD);
      break;
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(in[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

inline std::string Encode(std::u32string_view in) {
  std::string out;
  out.reserve(in.size());
  for (char32_t cp : in) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

// Number of code points in the first `bytes` bytes of a UTF-8 string.
inline std::size_t CodePointCount(std::string_view in, std::size_t bytes) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < bytes && i < in.size(); ++i) {
    if ((static_cast<unsigned char>(in[i]) & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace utf8

namespace text {

inline bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' ||
         c == U'\v' || c == 0xA0 || c == 0x2028 || c == 0x2029;
}

inline bool IsAsciiAlnum(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') ||
         (c >= U'A' && c <= U'Z');
}

// Word characters: ASCII alphanumerics plus every non-ASCII code point that
// is not whitespace or common typographic punctuation.
inline bool IsWordChar(char32_t c) {
  if (c < 0x80) return IsAsciiAlnum(c);
  if (IsSpace(c)) return false;
  // General punctuation block (dashes, curly quotes, ellipsis).
  if (c >= 0x2010 && c <= 0x205E) return false;
  if (c == 0xAB || c == 0xBB) return false;
  return true;
}

inline char32_t AsciiLower(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + (U'a' - U'A') : c;
}

inline std::u32string AsciiLower(std::u32string_view in) {
  std::u32string out(in);
  for (auto& c : out) c = AsciiLower(c);
  return out;
}

// Collapses whitespace runs to one space and trims both ends.
inline std::u32string NormalizeWhitespace(std::u32string_view in) {
  std::u32string out;
  out.reserve(in.size());
  bool pending_space = false;
  for (char32_t c : in) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

inline std::vector<std::u32string> SplitWhitespace(std::u32string_view in) {
  std::vector<std::u32string> out;
  std::u32string cur;
  for (char32_t c : in) {
    if (IsSpace(c)) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace text

namespace internal {

inline std::string Quoted(std::u32string_view s) {
  return "\"" + utf8::Encode(s) + "\"";
}

}  // namespace internal

}  // namespace exteval

#endif  // EXTEVAL_COMMON_H_
