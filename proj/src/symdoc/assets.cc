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

#include "symdoc/assets.h"

#include <array>

namespace symdoc {
namespace {

constexpr std::string_view kAppCss = R"css(html, body {
  margin: 0;
  height: 100%;
  font-family: sans-serif;
}
body.site {
  display: flex;
}
#side-pane {
  width: 22em;
  display: flex;
  flex-direction: column;
  border-right: 1px solid #ccc;
}
#side-pane .site-title {
  font-size: 1.1em;
  margin: 0.5em;
}
#search {
  margin: 0 0.5em 0.5em;
  padding: 0.3em;
}
#symbol-list {
  flex: 1;
  overflow-y: auto;
  list-style: none;
  margin: 0;
  padding: 0;
}
#symbol-list li {
  padding: 0.15em 0.5em;
  cursor: pointer;
  white-space: nowrap;
}
#symbol-list li.selected {
  background: #dde6ff;
}
#symbol-list li.no-matches {
  color: #888;
  cursor: default;
}
#symbol-list .article {
  color: #888;
  font-size: 0.85em;
}
#main-pane {
  flex: 1;
}
#main-frame {
  border: 0;
  width: 100%;
  height: 100%;
}
.kind-icon {
  width: 1em;
  height: 1em;
  vertical-align: middle;
  margin-right: 0.3em;
}
body.symbol-page {
  padding: 1em 2em;
}
.snippet {
  font-family: monospace;
  white-space: pre-wrap;
  background: #f7f7f7;
  padding: 0.8em;
}
a.int {
  color: blue;
}
a.ext {
  color: red;
}
)css";

constexpr std::string_view kAppJs = R"js(// Left pane: symbol list, incremental search, main-frame navigation.
(function () {
  'use strict';

  var list = document.getElementById('symbol-list');
  var search = document.getElementById('search');
  var frame = document.getElementById('main-frame');
  var entries = [];
  var pages = {};
  var selectedId = null;

  function queryWords(raw) {
    return raw.split(/[ \t\n\r\f\v]+/).filter(function (w) {
      return w.length > 0;
    }).map(function (w) {
      return w.toLowerCase();
    });
  }

  function filterEntries(raw) {
    var words = queryWords(raw);
    return entries.filter(function (e) {
      return words.every(function (w) {
        return e.norm.indexOf(w) !== -1;
      });
    });
  }

  function select(id) {
    if (!(id in pages)) {
      frame.src = 'assets/404.html';
      return;
    }
    var rows = list.querySelectorAll('li.selected');
    for (var i = 0; i < rows.length; i++) rows[i].classList.remove('selected');
    var row = list.querySelector('li[data-id="' + CSS.escape(id) + '"]');
    if (row) row.classList.add('selected');
    if (selectedId === id) return;
    selectedId = id;
    frame.src = pages[id];
  }

  function render(items) {
    list.textContent = '';
    if (items.length === 0) {
      var empty = document.createElement('li');
      empty.className = 'no-matches';
      empty.textContent = 'No matches';
      list.appendChild(empty);
      return;
    }
    var fragment = document.createDocumentFragment();
    items.forEach(function (e) {
      var li = document.createElement('li');
      li.tabIndex = 0;
      li.setAttribute('role', 'option');
      li.setAttribute('data-id', e.id);
      if (e.id === selectedId) li.className = 'selected';
      var icon = document.createElement('img');
      icon.className = 'kind-icon';
      icon.src = 'assets/icons/' + e.kind + '.svg';
      icon.alt = e.kind;
      li.appendChild(icon);
      li.appendChild(document.createTextNode(e.name + ' '));
      var article = document.createElement('span');
      article.className = 'article';
      article.textContent = e.article;
      li.appendChild(article);
      fragment.appendChild(li);
    });
    list.appendChild(fragment);
  }

  list.addEventListener('click', function (ev) {
    var li = ev.target.closest('li[data-id]');
    if (li) select(li.getAttribute('data-id'));
  });
  list.addEventListener('keydown', function (ev) {
    if (ev.key !== 'Enter') return;
    var li = ev.target.closest('li[data-id]');
    if (li) select(li.getAttribute('data-id'));
  });
  search.addEventListener('input', function () {
    render(filterEntries(search.value));
  });

  function load(path) {
    return fetch(path).then(function (r) {
      return r.json();
    });
  }

  Promise.all([load('data/search-table.json'), load('data/symbol-list.json')])
    .then(function (data) {
      entries = data[0].entries;
      data[1].entries.forEach(function (e) {
        pages[e.id] = e.page;
      });
      render(filterEntries(search.value));
    });
})();
)js";

constexpr std::string_view kNotFoundHtml = R"html(<!DOCTYPE html>
<html lang="en">
<head>
<meta charset="utf-8">
<title>Not found</title>
<link rel="stylesheet" href="app.css">
</head>
<body class="symbol-page">
<h1>Not found</h1>
<p>There is no page for this symbol.</p>
</body>
</html>
)html";

constexpr std::string_view kPredIcon =
    R"svg(<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 16 16" width="16" height="16"><circle cx="8" cy="8" r="7" fill="#2e7d32"/><text x="8" y="12" font-family="sans-serif" font-size="10" font-weight="bold" text-anchor="middle" fill="#fff">P</text></svg>
)svg";
constexpr std::string_view kModeIcon =
    R"svg(<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 16 16" width="16" height="16"><rect x="1" y="1" width="14" height="14" rx="3" fill="#6a1b9a"/><text x="8" y="12" font-family="sans-serif" font-size="10" font-weight="bold" text-anchor="middle" fill="#fff">M</text></svg>
)svg";
constexpr std::string_view kStructIcon =
    R"svg(<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 16 16" width="16" height="16"><polygon points="8,1 15,8 8,15 1,8" fill="#ef6c00"/><text x="8" y="11.5" font-family="sans-serif" font-size="8" font-weight="bold" text-anchor="middle" fill="#fff">S</text></svg>
)svg";
constexpr std::string_view kFuncIcon =
    R"svg(<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 16 16" width="16" height="16"><rect x="1" y="1" width="14" height="14" fill="#1565c0"/><text x="8" y="12" font-family="sans-serif" font-size="10" font-weight="bold" text-anchor="middle" fill="#fff">F</text></svg>
)svg";
constexpr std::string_view kAttrIcon =
    R"svg(<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 16 16" width="16" height="16"><polygon points="8,1 15,15 1,15" fill="#c62828"/><text x="8" y="13.5" font-family="sans-serif" font-size="8" font-weight="bold" text-anchor="middle" fill="#fff">A</text></svg>
)svg";

// Icon paths are indexed by KindIndex.
constexpr std::array<std::string_view, kSymbolKindCount> kIconPaths = {
    "assets/icons/pred.svg", "assets/icons/mode.svg", "assets/icons/struct.svg",
    "assets/icons/func.svg", "assets/icons/attr.svg"};

constexpr std::array<StaticAsset, 8> kAssets = {{
    {"assets/404.html", kNotFoundHtml},
    {"assets/app.css", kAppCss},
    {"assets/app.js", kAppJs},
    {kIconPaths[0], kPredIcon},
    {kIconPaths[1], kModeIcon},
    {kIconPaths[2], kStructIcon},
    {kIconPaths[3], kFuncIcon},
    {kIconPaths[4], kAttrIcon},
}};

}  // namespace

std::span<const StaticAsset> FrontendAssets() { return kAssets; }

std::string_view KindIconPath(SymbolKind kind) {
  return kIconPaths[KindIndex(kind)];
}

}  // namespace symdoc
