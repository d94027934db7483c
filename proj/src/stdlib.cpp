#include "envcheck/stdlib.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace envcheck {

namespace {

// Top-level modules of every 3.x release up to 3.13, before applying the
// version windows below.
constexpr std::array kPy3Modules = {
    "__future__", "_abc", "_aix_support", "_ast", "_asyncio", "_bisect", "_blake2", "_bootsubprocess", "_bz2",
    "_codecs", "_codecs_cn", "_codecs_hk", "_codecs_iso2022", "_codecs_jp", "_codecs_kr", "_codecs_tw",
    "_collections", "_collections_abc", "_compat_pickle", "_compression", "_contextvars", "_crypt", "_csv",
    "_ctypes", "_curses", "_curses_panel", "_datetime", "_dbm", "_decimal", "_dummy_thread", "_elementtree",
    "_frozen_importlib", "_frozen_importlib_external", "_functools", "_gdbm", "_hashlib", "_heapq", "_imp", "_io",
    "_json", "_locale", "_lsprof", "_lzma", "_markupbase", "_md5", "_msi", "_multibytecodec", "_multiprocessing",
    "_opcode", "_operator", "_osx_support", "_overlapped", "_pickle", "_posixshmem", "_posixsubprocess", "_py_abc",
    "_pydecimal", "_pyio", "_queue", "_random", "_scproxy", "_sha1", "_sha256", "_sha3", "_sha512", "_signal",
    "_sitebuiltins", "_socket", "_sqlite3", "_sre", "_ssl", "_stat", "_statistics", "_string", "_strptime",
    "_struct", "_symtable", "_thread", "_threading_local", "_tkinter", "_tomllib", "_tracemalloc", "_uuid",
    "_warnings", "_weakref", "_weakrefset", "_winapi", "_zoneinfo", "abc", "aifc", "antigravity", "argparse",
    "array", "ast", "asynchat", "asyncio", "asyncore", "atexit", "audioop", "base64", "bdb", "binascii", "binhex",
    "bisect", "builtins", "bz2", "cProfile", "calendar", "cgi", "cgitb", "chunk", "cmath", "cmd", "code", "codecs",
    "codeop", "collections", "colorsys", "compileall", "concurrent", "configparser", "contextlib", "contextvars",
    "copy", "copyreg", "crypt", "csv", "ctypes", "curses", "dataclasses", "datetime", "dbm", "decimal", "difflib",
    "dis", "distutils", "doctest", "dummy_threading", "email", "encodings", "ensurepip", "enum", "errno",
    "faulthandler", "fcntl", "filecmp", "fileinput", "fnmatch", "formatter", "fpectl", "fractions", "ftplib",
    "functools", "gc", "genericpath", "getopt", "getpass", "gettext", "glob", "graphlib", "grp", "gzip", "hashlib",
    "heapq", "hmac", "html", "http", "idlelib", "imaplib", "imghdr", "imp", "importlib", "inspect", "io",
    "ipaddress", "itertools", "json", "keyword", "lib2to3", "linecache", "locale", "logging", "lzma", "macpath",
    "mailbox", "mailcap", "marshal", "math", "mimetypes", "mmap", "modulefinder", "msilib", "msvcrt",
    "multiprocessing", "netrc", "nis", "nntplib", "nt", "ntpath", "nturl2path", "numbers", "opcode", "operator",
    "optparse", "os", "ossaudiodev", "parser", "pathlib", "pdb", "pickle", "pickletools", "pipes", "pkgutil",
    "platform", "plistlib", "poplib", "posix", "posixpath", "pprint", "profile", "pstats", "pty", "pwd",
    "py_compile", "pyclbr", "pydoc", "pydoc_data", "pyexpat", "queue", "quopri", "random", "re", "readline",
    "reprlib", "resource", "rlcompleter", "runpy", "sched", "secrets", "select", "selectors", "shelve", "shlex",
    "shutil", "signal", "site", "smtpd", "smtplib", "sndhdr", "socket", "socketserver", "spwd", "sqlite3",
    "sre_compile", "sre_constants", "sre_parse", "ssl", "stat", "statistics", "string", "stringprep", "struct",
    "subprocess", "sunau", "symbol", "symtable", "sys", "sysconfig", "syslog", "tabnanny", "tarfile", "telnetlib",
    "tempfile", "termios", "textwrap", "this", "threading", "time", "timeit", "tkinter", "token", "tokenize",
    "tomllib", "trace", "traceback", "tracemalloc", "tty", "turtle", "turtledemo", "types", "typing", "unicodedata",
    "unittest", "urllib", "uu", "uuid", "venv", "warnings", "wave", "weakref", "webbrowser", "winreg", "winsound",
    "wsgiref", "xdrlib", "xml", "xmlrpc", "zipapp", "zipfile", "zipimport", "zlib", "zoneinfo",
};

// First 3.x minor providing the module; absent means 3.0.
const std::map<std::string_view, int>& added_in() {
    static const std::map<std::string_view, int> m = {
        {"importlib", 1}, {"argparse", 2}, {"concurrent", 2}, {"sysconfig", 2}, {"faulthandler", 3},
        {"ipaddress", 3}, {"lzma", 3}, {"_lzma", 3}, {"venv", 3}, {"_decimal", 3}, {"asyncio", 4},
        {"_asyncio", 4}, {"enum", 4}, {"pathlib", 4}, {"selectors", 4}, {"statistics", 4}, {"tracemalloc", 4},
        {"_tracemalloc", 4}, {"ensurepip", 4}, {"_overlapped", 4}, {"_opcode", 4}, {"_stat", 4}, {"typing", 5},
        {"zipapp", 5}, {"secrets", 6}, {"_sha3", 6}, {"_blake2", 6}, {"contextvars", 7}, {"_contextvars", 7},
        {"dataclasses", 7}, {"_abc", 7}, {"_py_abc", 7}, {"_uuid", 7}, {"_posixshmem", 8}, {"zoneinfo", 9},
        {"_zoneinfo", 9}, {"graphlib", 9}, {"_aix_support", 9}, {"_bootsubprocess", 9}, {"_statistics", 10},
        {"tomllib", 11}, {"_tomllib", 11},
    };
    return m;
}

// First 3.x minor no longer providing the module.
const std::map<std::string_view, int>& removed_in() {
    static const std::map<std::string_view, int> m = {
        {"fpectl", 7}, {"macpath", 8}, {"dummy_threading", 9}, {"_dummy_thread", 9}, {"formatter", 10},
        {"parser", 10}, {"symbol", 10}, {"binhex", 11}, {"asynchat", 12}, {"asyncore", 12}, {"distutils", 12},
        {"imp", 12}, {"smtpd", 12}, {"aifc", 13}, {"audioop", 13}, {"cgi", 13}, {"cgitb", 13}, {"chunk", 13},
        {"crypt", 13}, {"_crypt", 13}, {"imghdr", 13}, {"mailcap", 13}, {"msilib", 13}, {"_msi", 13},
        {"nis", 13}, {"nntplib", 13}, {"ossaudiodev", 13}, {"pipes", 13}, {"sndhdr", 13}, {"spwd", 13},
        {"sunau", 13}, {"telnetlib", 13}, {"uu", 13}, {"xdrlib", 13}, {"lib2to3", 13},
    };
    return m;
}

// 3.0 modules with no 2.7 counterpart under the same name.
const std::set<std::string_view>& py3_renamed() {
    static const std::set<std::string_view> s = {
        "builtins", "queue", "configparser", "copyreg", "reprlib", "socketserver", "_thread", "html", "http",
        "xmlrpc", "tkinter", "winreg", "_pickle", "_datetime", "_queue", "_compat_pickle", "_collections_abc",
        "_sitebuiltins", "_frozen_importlib", "_frozen_importlib_external", "_imp", "_posixsubprocess", "_string",
        "_signal", "_winapi", "_compression", "_bz2", "_dbm", "_gdbm", "_sha1", "_sha256", "_sha512", "_pydecimal",
    };
    return s;
}

constexpr std::array kPy2OnlyModules = {
    "__builtin__", "_winreg", "anydbm", "BaseHTTPServer", "Bastion", "bsddb", "CGIHTTPServer", "commands",
    "compiler", "ConfigParser", "Cookie", "cookielib", "copy_reg", "cPickle", "cStringIO", "dbhash", "dircache",
    "DocXMLRPCServer", "dumbdbm", "dummy_thread", "exceptions", "fpformat", "future_builtins", "gdbm", "htmlentitydefs",
    "htmllib", "HTMLParser", "httplib", "ihooks", "imputil", "markupbase", "md5", "mhlib", "mimetools", "MimeWriter",
    "mimify", "multifile", "mutex", "new", "popen2", "posixfile", "Queue", "repr", "rexec", "rfc822", "robotparser",
    "ScrolledText", "sets", "sgmllib", "sha", "SimpleHTTPServer", "SimpleXMLRPCServer", "SocketServer", "statvfs",
    "StringIO", "thread", "Tix", "Tkinter", "tkFileDialog", "tkMessageBox", "ttk", "urllib2", "urlparse", "user",
    "UserDict", "UserList", "UserString", "whichdb", "xmlrpclib", "_sha", "_bsddb", "_hotshot", "hotshot",
};

}  // namespace

bool is_stdlib_module(std::string_view top, const InterpreterVersion& python) {
    const bool listed = std::find(kPy3Modules.begin(), kPy3Modules.end(), top) != kPy3Modules.end();
    if (python.major == 2) {
        if (std::find(kPy2OnlyModules.begin(), kPy2OnlyModules.end(), top) != kPy2OnlyModules.end()) return true;
        // 2.7 shipped argparse, importlib and sysconfig ahead of their 3.x arrival
        if (top == "argparse" || top == "importlib" || top == "sysconfig") return true;
        return listed && !added_in().contains(top) && !py3_renamed().contains(top);
    }
    if (!listed) return false;
    if (auto it = added_in().find(top); it != added_in().end() && python.minor < it->second) return false;
    if (auto it = removed_in().find(top); it != removed_in().end() && python.minor >= it->second) return false;
    return true;
}

}  // namespace envcheck
