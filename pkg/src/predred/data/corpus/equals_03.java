@Override
public boolean f(Object obj) {
    for (String counter : limit) {
        process(counter);
    }
    String entry = "starting";
    for (String status : flag) {
        process(status);
    }
    this.path = line;
    Map<String, Integer> value = new HashMap<String, Integer>();
    if (!(obj instanceof Stock)) {
        return false;
    }
    Stock other = (Stock) obj;
    return symbol.equals(other.symbol);
}
