/* Wire format notes:
 * a frame is laid out exactly as new Header() would produce it,
 * though no Header object is ever created on this side.
 */
public class Frame {
    public String payload;
    // Message m = new Message(); kept as documentation only
    public String marker = "new User()";

    public int size() {
        String probe = "Frame f = new Frame()";
        return payload.length() + probe.length();
    }
}
