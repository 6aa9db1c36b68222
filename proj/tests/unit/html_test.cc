// Copyright 2026 The symdoc Authors
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

#include <gtest/gtest.h>

#include <string>

#include "symdoc/html_lexer.h"
#include "symdoc/sanitize.h"

namespace symdoc {
namespace {

TEST(TokenizeHtml, SpansCoverTheInput) {
  std::string html =
      "<!DOCTYPE html><p class=x>t &amp; u<!-- c --><br/></p>tail";
  std::vector<LexDiagnostic> diags;
  auto tokens = TokenizeHtml(html, &diags);
  std::size_t pos = 0;
  for (const auto& t : tokens) {
    EXPECT_EQ(t.span.begin, pos);
    pos = t.span.end;
  }
  EXPECT_EQ(pos, html.size());
  EXPECT_TRUE(diags.empty());
  ASSERT_EQ(tokens.size(), 7u);
  EXPECT_EQ(tokens[0].kind, HtmlTokenKind::kDoctype);
  EXPECT_EQ(tokens[1].kind, HtmlTokenKind::kStartTag);
  EXPECT_EQ(tokens[1].name, "p");
  ASSERT_NE(tokens[1].Find("class"), nullptr);
  EXPECT_EQ(tokens[1].Find("class")->value, "x");
  EXPECT_EQ(tokens[3].kind, HtmlTokenKind::kComment);
  EXPECT_TRUE(tokens[4].self_closing);
  EXPECT_EQ(tokens[5].kind, HtmlTokenKind::kEndTag);
}

TEST(TokenizeHtml, AttributeValuesAreDecodedAndNamesLowercased) {
  auto tokens = TokenizeHtml(
      "<A HREF='a.html#F1' Data-Sym-Name=\"&lt;=\" bare=v checked>", nullptr);
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].name, "a");
  EXPECT_EQ(tokens[0].Find("href")->value, "a.html#F1");
  EXPECT_EQ(tokens[0].Find("data-sym-name")->value, "<=");
  EXPECT_EQ(tokens[0].Find("bare")->value, "v");
  EXPECT_EQ(tokens[0].Find("checked")->value, "");
}

TEST(TokenizeHtml, ScriptBodyIsRawText) {
  auto tokens = TokenizeHtml("<script>if (a<b) x='</p>';</script>", nullptr);
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[1].kind, HtmlTokenKind::kRawText);
  EXPECT_EQ(tokens[1].name, "script");
  EXPECT_EQ(tokens[2].kind, HtmlTokenKind::kEndTag);
}

TEST(TokenizeHtml, UnclosedTagIsDiagnosedAndLexingResumes) {
  std::string html = "<div class=\"x\" <a id=\"F\">t</a>";
  std::vector<LexDiagnostic> diags;
  auto tokens = TokenizeHtml(html, &diags);
  EXPECT_FALSE(diags.empty());
  bool found = false;
  for (const auto& t : tokens) {
    if (t.kind == HtmlTokenKind::kStartTag && t.name == "a") found = true;
  }
  EXPECT_TRUE(found);
}

TEST(TokenizeHtml, TruncatedInputsTerminate) {
  for (const char* s : {"<", "<a", "<a href=\"", "<!--", "<!", "</", "<script>",
                        "&", "<a b='c"}) {
    std::vector<LexDiagnostic> diags;
    auto tokens = TokenizeHtml(s, &diags);
    std::size_t end = tokens.empty() ? 0 : tokens.back().span.end;
    EXPECT_EQ(end, std::string(s).size()) << s;
  }
}

TEST(SanitizeFragment, DropsScriptsAndEventHandlers) {
  std::string out = SanitizeFragment(
      "<p onclick=\"evil()\" style=\"x\">hi<script>alert(1)</script>"
      "<img src=x onerror=alert(1)><a href=\"javascript:alert(1)\">j</a>"
      "<a href=\" JaVaScRiPt:x\">k</a></p>");
  EXPECT_EQ(out, "<p>hi<a>j</a><a>k</a></p>");
}

TEST(SanitizeFragment, KeepsAllowedMarkupAndBalancesTags) {
  EXPECT_EQ(SanitizeFragment("<pre><b>x</b> <a href=\"a.html#F1\">y</a>"),
            "<pre><b>x</b> <a href=\"a.html#F1\">y</a></pre>");
  EXPECT_EQ(SanitizeFragment("<i>a</b>c</i>"), "<i>ac</i>");
  EXPECT_EQ(SanitizeFragment("<a href=\"#A\">x<a href=\"#B\">y"),
            "<a href=\"#A\">x</a><a href=\"#B\">y</a>");
}

TEST(SanitizeFragment, KeepsDataAttributesAndEscapesValues) {
  EXPECT_EQ(SanitizeFragment("<a id=\"F\" data-sym-name=\"&lt;=\">x</a>"),
            "<a id=\"F\" data-sym-name=\"&lt;=\">x</a>");
}

TEST(SanitizeFragment, StrayLessThanIsEscaped) {
  EXPECT_EQ(SanitizeFragment("a < b"), "a &lt; b");
}

TEST(SanitizeFragment, OutputContainsNoScriptTag) {
  for (const char* s :
       {"<scr<script>ipt>alert(1)</script>", "<SCRIPT>x</SCRIPT>",
        "<svg><script>x</script></svg>", "<style>p{}</style><script",
        "<iframe src=x></iframe>", "<<script>>"}) {
    std::string out = SanitizeFragment(s);
    std::string lower;
    for (char c : out) lower += static_cast<char>(std::tolower(c));
    EXPECT_EQ(lower.find("<script"), std::string::npos) << s << " -> " << out;
    EXPECT_EQ(lower.find("<iframe"), std::string::npos) << s << " -> " << out;
  }
}

}  // namespace
}  // namespace symdoc
