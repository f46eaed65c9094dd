// Validator for the expression grammar the server prints:
//   expr := sum
//   sum  := poly ('+' poly)*
//   poly := prod (GATE prod)*
//   prod := atom ('*' atom)*
//   atom := '~'? (VAR | CONST | '(' expr ')')
// The UI refuses to display any string this parser rejects.

const OP_NAMES = new Set(["AND", "OR", "XOR", "NAND", "NOR", "XNOR"]);

type Token =
  | { kind: "word"; text: string }
  | { kind: "bit"; text: string }
  | { kind: "punct"; text: string };

function tokenize(text: string): Token[] {
  const tokens: Token[] = [];
  let i = 0;
  while (i < text.length) {
    const ch = text[i];
    if (/\s/.test(ch)) {
      i += 1;
      continue;
    }
    if (/[A-Za-z]/.test(ch)) {
      let j = i + 1;
      while (j < text.length && /[A-Za-z0-9]/.test(text[j])) {
        j += 1;
      }
      tokens.push({ kind: "word", text: text.slice(i, j) });
      i = j;
      continue;
    }
    if (ch === "0" || ch === "1") {
      tokens.push({ kind: "bit", text: ch });
      i += 1;
      continue;
    }
    if ("+*~/()".includes(ch)) {
      tokens.push({ kind: "punct", text: ch });
      i += 1;
      continue;
    }
    throw new Error(`unexpected character ${JSON.stringify(ch)} at ${i}`);
  }
  return tokens;
}

class Parser {
  private i = 0;

  constructor(private readonly tokens: Token[]) {}

  private peek(): Token | undefined {
    return this.tokens[this.i];
  }

  private take(): Token {
    const tok = this.tokens[this.i];
    if (tok === undefined) {
      throw new Error("unexpected end of expression");
    }
    this.i += 1;
    return tok;
  }

  private expectPunct(text: string): void {
    const tok = this.take();
    if (tok.kind !== "punct" || tok.text !== text) {
      throw new Error(`expected ${JSON.stringify(text)}`);
    }
  }

  parse(): void {
    this.sum();
    if (this.peek() !== undefined) {
      throw new Error(`trailing token ${JSON.stringify(this.peek()!.text)}`);
    }
  }

  private sum(): void {
    this.poly();
    while (this.peek()?.kind === "punct" && this.peek()?.text === "+") {
      this.take();
      this.poly();
    }
  }

  private poly(): void {
    this.prod();
    for (;;) {
      const tok = this.peek();
      if (tok?.kind !== "word" || /^x\d+$/.test(tok.text)) {
        return;
      }
      const first = this.take();
      this.expectPunct("/");
      const second = this.take();
      if (
        second.kind !== "word" ||
        !OP_NAMES.has(first.text) ||
        !OP_NAMES.has(second.text)
      ) {
        throw new Error(`malformed gate pair near ${JSON.stringify(first.text)}`);
      }
      this.prod();
    }
  }

  private prod(): void {
    this.atom();
    while (this.peek()?.kind === "punct" && this.peek()?.text === "*") {
      this.take();
      this.atom();
    }
  }

  private atom(): void {
    const tok = this.peek();
    if (tok === undefined) {
      throw new Error("unexpected end of expression");
    }
    if (tok.kind === "punct" && tok.text === "~") {
      this.take();
      this.atom();
      return;
    }
    if (tok.kind === "punct" && tok.text === "(") {
      this.take();
      this.sum();
      this.expectPunct(")");
      return;
    }
    if (tok.kind === "bit") {
      this.take();
      this.expectPunct("/");
      const second = this.take();
      if (second.kind !== "bit") {
        throw new Error("malformed constant");
      }
      return;
    }
    if (tok.kind === "word" && /^x\d+$/.test(tok.text)) {
      this.take();
      return;
    }
    throw new Error(`unexpected token ${JSON.stringify(tok.text)}`);
  }
}

export function checkExpr(text: string): void {
  new Parser(tokenize(text)).parse();
}

export function isValidExpr(text: string): boolean {
  try {
    checkExpr(text);
    return true;
  } catch {
    return false;
  }
}
